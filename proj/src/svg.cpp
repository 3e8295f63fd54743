#include "windrisk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "windrisk/io.hpp"

namespace windrisk {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 832.0;
constexpr double kTop = 44.0;
constexpr double kBottom = 420.0;

std::string fmt(double v, int precision = 2) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string label_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Linear data-to-pixel map.
struct Scale {
  double dmin = 0.0, dmax = 1.0;
  double pmin = 0.0, pmax = 1.0;

  double operator()(double v) const {
    return pmin + (v - dmin) / (dmax - dmin) * (pmax - pmin);
  }
};

Scale make_scale(double dmin, double dmax, double pmin, double pmax) {
  if (dmax <= dmin) {
    double pad = (dmin == 0.0) ? 1.0 : std::fabs(dmin) * 0.5;
    dmin -= pad;
    dmax += pad;
  }
  return Scale{dmin, dmax, pmin, pmax};
}

double nice_step(double range, int target_ticks) {
  double raw = range / static_cast<double>(target_ticks);
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double norm = raw / mag;
  double step = (norm < 1.5) ? 1.0 : (norm < 3.5) ? 2.0 : (norm < 7.5) ? 5.0 : 10.0;
  return step * mag;
}

void open_svg(std::string& out, const std::string& title) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, 0) +
         "\" height=\"" + fmt(kHeight, 0) + "\" viewBox=\"0 0 " + fmt(kWidth, 0) + " " +
         fmt(kHeight, 0) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth, 0) + "\" height=\"" +
         fmt(kHeight, 0) + "\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(kWidth / 2.0) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">" +
         title + "</text>\n";
}

void frame_and_y_axis(std::string& out, const Scale& ys, const std::string& y_label) {
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kRight - kLeft) + "\" height=\"" + fmt(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  double step = nice_step(ys.dmax - ys.dmin, 6);
  double first = std::ceil(ys.dmin / step) * step;
  for (int i = 0;; ++i) {
    double v = first + step * i;
    if (v > ys.dmax + step * 1e-9) break;
    double y = ys(v);
    out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kRight) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + fmt(kLeft - 6.0) + "\" y=\"" + fmt(y + 4.0) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" +
           label_num(v) + "</text>\n";
  }
  out += "<text x=\"16\" y=\"" + fmt((kTop + kBottom) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " +
         fmt((kTop + kBottom) / 2.0) + ")\">" + y_label + "</text>\n";
}

void x_axis_numeric(std::string& out, const Scale& xs, const std::string& x_label) {
  double step = nice_step(xs.dmax - xs.dmin, 8);
  double first = std::ceil(xs.dmin / step) * step;
  for (int i = 0;; ++i) {
    double v = first + step * i;
    if (v > xs.dmax + step * 1e-9) break;
    double x = xs(v);
    out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(x) +
           "\" y2=\"" + fmt(kBottom + 5.0) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" +
           label_num(v) + "</text>\n";
  }
  out += "<text x=\"" + fmt((kLeft + kRight) / 2.0) + "\" y=\"" + fmt(kHeight - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" + x_label +
         "</text>\n";
}

void x_axis_slots(std::string& out, std::size_t slots, std::span<const std::string> labels,
                  const std::string& x_label) {
  double slot_w = (kRight - kLeft) / static_cast<double>(slots);
  std::size_t stride = (slots + 23) / 24;  // at most 24 labels
  for (std::size_t i = 0; i < slots; i += stride) {
    double x = kLeft + slot_w * (static_cast<double>(i) + 0.5);
    std::string text = i < labels.size() ? labels[i] : std::to_string(i);
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" + text +
           "</text>\n";
  }
  out += "<text x=\"" + fmt((kLeft + kRight) / 2.0) + "\" y=\"" + fmt(kHeight - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" + x_label +
         "</text>\n";
}

void legend(std::string& out, std::span<const LineSeries> series) {
  double y = kTop + 16.0;
  for (const LineSeries& s : series) {
    out += "<line x1=\"" + fmt(kLeft + 10.0) + "\" y1=\"" + fmt(y - 4.0) + "\" x2=\"" +
           fmt(kLeft + 34.0) + "\" y2=\"" + fmt(y - 4.0) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt(kLeft + 40.0) + "\" y=\"" + fmt(y) +
           "\" font-family=\"monospace\" font-size=\"11\">" + s.label + "</text>\n";
    y += 16.0;
  }
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, std::span<const LineSeries> series) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const LineSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  ymin = std::min(ymin, 0.0);

  Scale xs = make_scale(xmin, xmax, kLeft, kRight);
  Scale ys = make_scale(ymin, ymax * 1.05, kBottom, kTop);

  std::string out;
  open_svg(out, title);
  frame_and_y_axis(out, ys, y_label);
  x_axis_numeric(out, xs, x_label);
  for (const LineSeries& s : series) {
    if (s.points.empty()) continue;
    std::string poly = "<polyline fill=\"none\" stroke=\"" + s.color +
                       "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) {
      poly += fmt(xs(x)) + "," + fmt(ys(y)) + " ";
    }
    poly += "\"/>\n";
    out += poly;
    if (s.markers) {
      for (const auto& [x, y] : s.points) {
        out += "<circle cx=\"" + fmt(xs(x)) + "\" cy=\"" + fmt(ys(y)) +
               "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
      }
    }
  }
  legend(out, series);
  out += "</svg>\n";
  return out;
}

std::string balance_bars_svg(const std::string& title, std::span<const double> deficits,
                             std::span<const double> surpluses) {
  const std::size_t n = deficits.size();
  double max_def = 0.0, max_sur = 0.0;
  for (double d : deficits) max_def = std::max(max_def, d);
  for (double u : surpluses) max_sur = std::max(max_sur, u);

  // Surplus grows upward, deficit hangs below the zero line.
  Scale ys = make_scale(-max_def * 1.05, max_sur * 1.05, kBottom, kTop);

  std::string out;
  open_svg(out, title);
  frame_and_y_axis(out, ys, "GWh");

  double zero_y = ys(0.0);
  out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(zero_y) + "\" x2=\"" + fmt(kRight) +
         "\" y2=\"" + fmt(zero_y) + "\" stroke=\"black\"/>\n";

  double slot_w = (kRight - kLeft) / static_cast<double>(n == 0 ? 1 : n);
  double bar_w = slot_w * 0.8;
  for (std::size_t i = 0; i < n; ++i) {
    double x = kLeft + slot_w * (static_cast<double>(i) + 0.1);
    if (surpluses[i] > 0.0) {
      double y = ys(surpluses[i]);
      out += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(bar_w) +
             "\" height=\"" + fmt(zero_y - y) + "\" fill=\"#2ca02c\"/>\n";
    }
    if (deficits[i] > 0.0) {
      double y = ys(-deficits[i]);
      out += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(zero_y) + "\" width=\"" + fmt(bar_w) +
             "\" height=\"" + fmt(y - zero_y) + "\" fill=\"#d62728\"/>\n";
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i % 24));
  x_axis_slots(out, n, labels, "hour");
  out += "</svg>\n";
  return out;
}

std::string boxplot_chart_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              std::span<const BoxplotSummary> summaries,
                              std::span<const std::string> x_tick_labels) {
  double ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const BoxplotSummary& s : summaries) {
    if (first) {
      ymin = s.minimum;
      ymax = s.maximum;
      first = false;
    } else {
      ymin = std::min(ymin, s.minimum);
      ymax = std::max(ymax, s.maximum);
    }
  }
  double pad = (ymax - ymin) * 0.05;
  if (pad == 0.0) pad = 0.5;
  Scale ys = make_scale(ymin - pad, ymax + pad, kBottom, kTop);

  std::string out;
  open_svg(out, title);
  frame_and_y_axis(out, ys, y_label);
  x_axis_slots(out, summaries.size(), x_tick_labels, x_label);

  double slot_w = (kRight - kLeft) / static_cast<double>(summaries.empty() ? 1 : summaries.size());
  double box_w = slot_w * 0.55;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const BoxplotSummary& s = summaries[i];
    double cx = kLeft + slot_w * (static_cast<double>(i) + 0.5);
    double x0 = cx - box_w / 2.0;
    double x1 = cx + box_w / 2.0;
    // Whisker stems and caps.
    out += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(ys(s.lower_whisker)) + "\" x2=\"" +
           fmt(cx) + "\" y2=\"" + fmt(ys(s.q1)) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(ys(s.q3)) + "\" x2=\"" + fmt(cx) +
           "\" y2=\"" + fmt(ys(s.upper_whisker)) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(cx - box_w / 4.0) + "\" y1=\"" + fmt(ys(s.lower_whisker)) +
           "\" x2=\"" + fmt(cx + box_w / 4.0) + "\" y2=\"" + fmt(ys(s.lower_whisker)) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(cx - box_w / 4.0) + "\" y1=\"" + fmt(ys(s.upper_whisker)) +
           "\" x2=\"" + fmt(cx + box_w / 4.0) + "\" y2=\"" + fmt(ys(s.upper_whisker)) +
           "\" stroke=\"black\"/>\n";
    // Box and median.
    out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(ys(s.q3)) + "\" width=\"" + fmt(box_w) +
           "\" height=\"" + fmt(ys(s.q1) - ys(s.q3)) +
           "\" fill=\"#aec7e8\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(ys(s.median)) + "\" x2=\"" + fmt(x1) +
           "\" y2=\"" + fmt(ys(s.median)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (double v : s.outliers) {
      out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(ys(v)) +
             "\" r=\"2.5\" fill=\"none\" stroke=\"#d62728\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string interval_chart_svg(const std::string& title, const std::string& x_label,
                               const std::string& y_label,
                               const ClusterRiskProfile& profile) {
  std::vector<LineSeries> series(2);
  series[0].label = "upper bound";
  series[0].color = "#d62728";
  series[0].markers = true;
  series[1].label = "lower bound";
  series[1].color = "#1f77b4";
  series[1].markers = true;
  for (const auto& entry : profile.entries) {
    series[0].points.emplace_back(static_cast<double>(entry.n), entry.high());
    series[1].points.emplace_back(static_cast<double>(entry.n), entry.low());
  }
  return line_chart_svg(title, x_label, y_label, series);
}

void emit_svg(const std::string& path, const std::string& svg) {
  write_text_file(path, svg);
}

}  // namespace windrisk
