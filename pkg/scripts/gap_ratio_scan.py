#!/usr/bin/env python3
"""How fast does the witness ratio d / ln(n) drift toward 1?

Builds the explicit perimeter-gap witnesses for every admissible prime pair
up to --max-p and prints the ratio column; the asymptotic drift is recorded
here, never asserted.  Small instances actually sit above 1 because n1*n2
undershoots e^d at this scale.

The witnesses grow fast: n has hundreds of digits already around p = 300,
so the table reports the digit count of n rather than n itself.

Usage: python scripts/gap_ratio_scan.py [--max-p 300]
"""

import argparse
import math
import sys

from vtcycles.numbergap import perimeter_gap_table
from vtcycles.reports import write_csv


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-p", type=int, default=300)
    args = parser.parse_args()

    rows = perimeter_gap_table(args.max_p)
    slim = [{
        "p": r["p"], "q": r["q"], "d": r["d"],
        "digits_n": int(r["ln_n"] / math.log(10)) + 1,
        "ln_n": round(r["ln_n"], 3),
        "ratio": round(r["ratio"], 6),
    } for r in rows]
    sys.stdout.write(write_csv(slim, ("p", "q", "d", "digits_n", "ln_n",
                                      "ratio")))
    if rows:
        worst = min(r["ratio"] for r in rows)
        last = rows[-1]["ratio"]
        sys.stdout.write(f"# minimum ratio {worst:.6f}, "
                         f"ratio at largest d {last:.6f}\n")


if __name__ == "__main__":
    main()
