"""Regenerate the bundled knot tables from the ``database_knotinfo`` package.

Writes ``src/bridgepass/data/knots.csv`` (name, PD terms) and
``tests/data/knotinfo_jones.csv`` (name, Jones polynomial in t as published),
the latter used by the test-suite as an external cross-check.

    pip install database_knotinfo
    python scripts/build_knot_table.py
"""

import csv
import json
import os
from pathlib import Path

import database_knotinfo

MAX_CROSSINGS = 9
ROOT = Path(__file__).resolve().parents[1]


def main():
    src = Path(os.path.dirname(database_knotinfo.__file__)) / "csv_data" / "knotinfo_data_complete.csv"
    rows = []
    with open(src, newline="") as fh:
        for row in csv.DictReader(fh, delimiter="|"):
            try:
                c = int(row["crossing_number"])
            except ValueError:
                continue
            if 1 <= c <= MAX_CROSSINGS:
                rows.append(row)
    with open(ROOT / "src/bridgepass/data/knots.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "pd_notation"])
        for row in rows:
            terms = json.loads(row["pd_notation"])
            w.writerow([row["name"], " ".join("X[%d,%d,%d,%d]" % tuple(t) for t in terms)])
    with open(ROOT / "tests/data/knotinfo_jones.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "jones_polynomial"])
        for row in rows:
            w.writerow([row["name"], row["jones_polynomial"].replace(" ", "")])
    print(f"wrote {len(rows)} knots")


if __name__ == "__main__":
    main()
