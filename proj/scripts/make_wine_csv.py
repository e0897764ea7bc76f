#!/usr/bin/env python3
"""Export the bundled UCI Wine dataset as data/wine.csv.

Layout: 13 numeric feature columns named after the original attributes,
then a categorical `class` column, 178 rows.
"""
import csv
import pathlib

from sklearn.datasets import load_wine


def main() -> None:
    wine = load_wine()
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "wine.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(wine.feature_names) + ["class"])
        for row, label in zip(wine.data, wine.target):
            writer.writerow([repr(float(v)) for v in row] + [wine.target_names[label]])
    print(f"wrote {out} ({len(wine.data)} rows, {len(wine.feature_names)} features)")


if __name__ == "__main__":
    main()
