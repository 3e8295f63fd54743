#!/usr/bin/env python3
"""Regenerates the synthetic CSV fixtures under data/.

The fixtures are self-contained synthetic sets with pinned landmark values:

* data/wind_speeds.csv   360 hourly speeds (15 days, April 2005 start) for two
                         towers; tower T71 has exactly 26 out-of-band hours
                         (below 4 m/s or above 25 m/s), including a six-hour
                         afternoon calm on day 8 that hits the peak demand
                         slots.
* data/demand.csv        24-slot, three-sector demand shape peaking 11:00-18:00;
                         slots 16 and 17 equal 14.23/0.15 GWh so the worst
                         no-wind hour at 15% penetration produces a 14.23 GWh
                         deficit (=> critical threshold 0.15*5/14.23 = 5.2707%).
* data/annual.csv        1990-2009 wind/total GWh with noisy exponential
                         penetration growth (~3.4% by 2009, 15% around 2016).
* data/annual_exact.csv  noiseless penetration 0.5*exp(0.2*(year-1990)).
* data/config.json       example run configuration wired to the fixtures.

Deterministic: fixed RNG seed, stable formatting. Run from the repo root.
"""

import json
import math
import random
import os

OUT_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

CUT_IN = 4.0
CUT_OUT = 25.0
PENETRATION = 0.15
RESERVE = 5.0
TARGET_MAX_DEFICIT = 14.23

DAYS = 15
HOURS = DAYS * 24

# Demand slots (GWh per hour). Slots 16/17 carry the deficit landmark.
PEAK = TARGET_MAX_DEFICIT / PENETRATION  # 94.8666... GWh
DEMAND_TOTAL = [
    56.0, 54.0, 53.0, 52.0, 53.0, 56.0, 62.0, 70.0, 78.0, 84.0, 88.0, 92.0,
    93.0, 94.0, 94.0, 94.0, PEAK, PEAK, 93.0, 90.0, 82.0, 74.0, 66.0, 60.0,
]
COMMERCIAL = [
    8.0, 7.0, 6.0, 6.0, 6.0, 7.0, 10.0, 16.0, 24.0, 30.0, 34.0, 36.0,
    37.0, 38.0, 38.0, 38.0, 40.0, 40.0, 36.0, 30.0, 22.0, 16.0, 12.0, 10.0,
]
INDUSTRIAL = [20.0] * 24

# (day, hour-of-day) -> forced T71 value outside the [4, 25] band.
FORCED_OUT_OF_BAND = {
    (2, 2): 3.4, (2, 3): 2.8, (2, 4): 3.6,
    (4, 22): 3.1, (4, 23): 2.2,
    (5, 5): 3.7, (5, 6): 3.2,
    (7, 13): 3.0, (7, 14): 2.2, (7, 15): 1.6, (7, 16): 1.1, (7, 17): 0.8, (7, 18): 2.5,
    (9, 0): 2.9, (9, 1): 2.1, (9, 2): 3.3,
    (11, 1): 26.1, (11, 2): 27.4, (11, 3): 26.8, (11, 4): 25.9,
    (12, 20): 3.5, (12, 21): 2.7,
    (13, 7): 3.8, (13, 8): 3.4,
    (14, 3): 2.4, (14, 4): 3.1,
}

# Low but admissible wind ramping into/out of the day-7 calm.
FORCED_IN_BAND = {
    (7, 10): 6.1, (7, 11): 5.6, (7, 12): 5.2, (7, 19): 6.4,
}


def fmt(value):
    text = repr(float(value))
    return text


def gen_speeds(rng, base_level, swing, phase, offset_range, noise_range, lo, hi):
    # Wind speed persists from hour to hour: diurnal base + slowly varying
    # day level + AR(1)-filtered noise over the whole contiguous sequence.
    day_offsets = [rng.uniform(-offset_range, offset_range) for _ in range(DAYS)]
    speeds = []
    ar = 0.0
    for day in range(DAYS):
        for hod in range(24):
            ar = 0.85 * ar + rng.uniform(-noise_range, noise_range)
            base = base_level + swing * math.cos(2.0 * math.pi * (hod - phase) / 24.0)
            v = base + day_offsets[day] + ar
            v = min(max(v, lo), hi)
            speeds.append(round(v, 2))
    return speeds


def timestamp(hour_index):
    day = hour_index // 24
    hod = hour_index % 24
    return f"2005-04-{day + 1:02d}T{hod:02d}:00"


def main():
    rng = random.Random(20260809)

    # --- wind speeds -------------------------------------------------------
    t71 = gen_speeds(rng, 10.3, 2.8, 3.0, 2.2, 0.75, 4.4, 23.5)
    t72 = gen_speeds(rng, 9.8, 2.3, 5.0, 2.5, 0.9, 3.0, 26.0)

    for (day, hod), value in FORCED_OUT_OF_BAND.items():
        t71[(day - 1) * 24 + hod] = value
    for (day, hod), value in FORCED_IN_BAND.items():
        t71[(day - 1) * 24 + hod] = value

    out_of_band = [i for i, v in enumerate(t71) if v < CUT_IN or v > CUT_OUT]
    assert len(out_of_band) == 26, f"expected 26 out-of-band hours, got {len(out_of_band)}"
    assert len(FORCED_OUT_OF_BAND) == 26
    for i in out_of_band:
        assert (i % 24 not in (16, 17)) or (i // 24 == 6), \
            f"no-wind hour at peak slot outside the calm day: index {i}"

    wind_lines = ["timestamp,T71,T72"]
    for i in range(HOURS):
        wind_lines.append(f"{timestamp(i)},{t71[i]:.2f},{t72[i]:.2f}")
    with open(os.path.join(OUT_DIR, "wind_speeds.csv"), "w") as f:
        f.write("\n".join(wind_lines) + "\n")

    # --- demand ------------------------------------------------------------
    demand_lines = ["hour,residential,commercial,industrial_agricultural"]
    for hod in range(24):
        residential = DEMAND_TOTAL[hod] - COMMERCIAL[hod] - INDUSTRIAL[hod]
        assert residential > 0.0
        demand_lines.append(
            f"{hod},{fmt(residential)},{fmt(COMMERCIAL[hod])},{fmt(INDUSTRIAL[hod])}")
    with open(os.path.join(OUT_DIR, "demand.csv"), "w") as f:
        f.write("\n".join(demand_lines) + "\n")

    # --- sanity: replicate the pipeline ------------------------------------
    daily_total = sum(DEMAND_TOTAL)
    admissible = sum(v for v in t71 if CUT_IN <= v <= CUT_OUT)
    k = DAYS * daily_total / admissible
    deficits = []
    for i, s in enumerate(t71):
        basis = k * s if CUT_IN <= s <= CUT_OUT else 0.0
        target = PENETRATION * DEMAND_TOTAL[i % 24]
        deficits.append(max(0.0, target - PENETRATION * basis))
    deficits_sorted = sorted(deficits, reverse=True)
    max_def = deficits_sorted[0]
    runner_up = next(d for d in deficits_sorted if d < max_def - 1e-9)
    assert abs(max_def - TARGET_MAX_DEFICIT) < 1e-9, max_def
    assert runner_up < 14.15, runner_up
    p_star = PENETRATION * RESERVE / max_def

    # --- annual ------------------------------------------------------------
    annual_lines = ["year,wind_gwh,total_gwh"]
    for year in range(1990, 2010):
        total = 250000.0 * 1.02 ** (year - 1990)
        percent = 0.075 * math.exp(0.2 * (year - 1990)) * (1.0 + rng.uniform(-0.07, 0.07))
        wind = total * percent / 100.0
        annual_lines.append(f"{year},{wind:.1f},{total:.1f}")
    with open(os.path.join(OUT_DIR, "annual.csv"), "w") as f:
        f.write("\n".join(annual_lines) + "\n")

    exact_lines = ["year,wind_gwh,total_gwh"]
    for year in range(1990, 2009):
        percent = 0.5 * math.exp(0.2 * (year - 1990))
        wind = 100000.0 * percent / 100.0
        exact_lines.append(f"{year},{fmt(wind)},{fmt(100000.0)}")
    with open(os.path.join(OUT_DIR, "annual_exact.csv"), "w") as f:
        f.write("\n".join(exact_lines) + "\n")

    # --- example config ----------------------------------------------------
    config = {
        "inputs": {
            "wind_csv": "data/wind_speeds.csv",
            "tower": "T71",
            "demand_csv": "data/demand.csv",
            "annual_csv": "data/annual.csv",
        },
        "conversion": {"cut_in_ms": 4.0, "cut_out_ms": 25.0},
        "scenario": {"penetration": 0.15, "reserve_gwh": 5.0, "reference_p": 0.15},
        "clusters": {"n_max": 15},
        "acf": {"max_lag": 6, "confidence": 0.95},
        "fleet": {"nameplate_gw": 0.25, "fast_fraction": 0.25},
        "growth": {"target_percent": 15.0},
        "sweep": {
            "penetrations": [round(0.01 * i, 2) for i in range(1, 16)],
            "reserves_gwh": [2.5, 5.0],
        },
        "output": {"dir": "out", "plots": True},
    }
    with open(os.path.join(OUT_DIR, "config.json"), "w") as f:
        json.dump(config, f, indent=2)
        f.write("\n")

    print(f"hours: {HOURS}, out-of-band: {len(out_of_band)} ({100.0 * len(out_of_band) / HOURS:.4f}%)")
    print(f"daily demand total: {daily_total!r} GWh")
    print(f"k: {k!r} GWh per (m/s h)")
    print(f"max deficit: {max_def!r} GWh, runner-up: {runner_up!r}")
    print(f"p*: {100.0 * p_star!r} -> printed {100.0 * p_star:.4f}%")
    print(f"deficit hours > reserve: {sum(1 for d in deficits if d > RESERVE)}")


if __name__ == "__main__":
    main()
