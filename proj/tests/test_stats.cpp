#include <doctest.h>

#include "test_support.hpp"
#include "windrisk/errors.hpp"
#include "windrisk/stats.hpp"

using namespace windrisk;

TEST_SUITE("stats") {

TEST_CASE("constant sample collapses the box") {
  std::vector<double> samples(15, 7.0);
  BoxplotSummary box = boxplot_summary(samples);
  CHECK(box.minimum == 7.0);
  CHECK(box.q1 == 7.0);
  CHECK(box.median == 7.0);
  CHECK(box.q3 == 7.0);
  CHECK(box.maximum == 7.0);
  CHECK(box.outliers.empty());
}

TEST_CASE("known small samples") {
  SUBCASE("odd count with a far outlier") {
    std::vector<double> samples{1.0, 2.0, 3.0, 4.0, 100.0};
    BoxplotSummary box = boxplot_summary(samples);
    CHECK(box.median == 3.0);
    CHECK(box.q1 == 2.0);   // median of {1,2,3}
    CHECK(box.q3 == 4.0);   // median of {3,4,100}
    CHECK(box.upper_whisker == 4.0);  // fence at q3 + 1.5*2 = 7
    REQUIRE(box.outliers.size() == 1);
    CHECK(box.outliers[0] == 100.0);
    CHECK(box.maximum == 100.0);
  }
  SUBCASE("even count hinges") {
    std::vector<double> samples{1.0, 2.0, 3.0, 4.0};
    BoxplotSummary box = boxplot_summary(samples);
    CHECK(box.median == 2.5);
    CHECK(box.q1 == 1.5);
    CHECK(box.q3 == 3.5);
    CHECK(box.outliers.empty());
  }
}

TEST_CASE("matches the sort/hinge/fence oracle on random samples") {
  testsup::Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng.index(40);
    std::vector<double> samples;
    for (std::size_t i = 0; i < n; ++i) {
      // Occasional spikes so fences actually cut.
      samples.push_back(rng.coin(0.1) ? rng.uniform(-100.0, 100.0)
                                      : rng.uniform(-5.0, 5.0));
    }
    BoxplotSummary ours = boxplot_summary(samples);
    BoxplotSummary oracle = testsup::oracle_boxplot(samples);
    REQUIRE(testsup::boxplot_equal(ours, oracle));
  }
}

TEST_CASE("ordering invariants and fence condition") {
  testsup::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng.index(30);
    std::vector<double> samples;
    for (std::size_t i = 0; i < n; ++i) samples.push_back(rng.uniform(-50.0, 50.0));
    BoxplotSummary box = boxplot_summary(samples);

    CHECK(box.minimum <= box.lower_whisker);
    CHECK(box.lower_whisker <= box.q1);
    CHECK(box.q1 <= box.median);
    CHECK(box.median <= box.q3);
    CHECK(box.q3 <= box.upper_whisker);
    CHECK(box.upper_whisker <= box.maximum);
    double lo = box.q1 - 1.5 * box.iqr();
    double hi = box.q3 + 1.5 * box.iqr();
    for (double v : box.outliers) CHECK((v < lo || v > hi));
  }
}

TEST_CASE("permutation invariance") {
  testsup::Rng rng(9);
  std::vector<double> samples;
  for (int i = 0; i < 25; ++i) samples.push_back(rng.uniform(0.0, 10.0));
  BoxplotSummary before = boxplot_summary(samples);
  for (std::size_t i = samples.size(); i-- > 1;) {
    std::swap(samples[i], samples[rng.index(i + 1)]);
  }
  BoxplotSummary after = boxplot_summary(samples);
  CHECK(testsup::boxplot_equal(before, after));
}

TEST_CASE("quantile with linear interpolation") {
  std::vector<double> three{1.0, 2.0, 3.0};
  CHECK(quantile_linear(three, 0.5) == 2.0);
  CHECK(quantile_linear(three, 0.0) == 1.0);
  CHECK(quantile_linear(three, 1.0) == 3.0);

  std::vector<double> two{0.0, 10.0};
  CHECK(quantile_linear(two, 0.025) == 0.25);

  std::vector<double> one{4.2};
  CHECK(quantile_linear(one, 0.3) == 4.2);

  CHECK_THROWS_AS(quantile_linear(std::vector<double>{}, 0.5), InvalidParameterError);
  CHECK_THROWS_AS(quantile_linear(two, 1.5), InvalidParameterError);
}

}  // TEST_SUITE
