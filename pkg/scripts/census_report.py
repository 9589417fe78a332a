"""Integer census summary: counts per tail start and construction coverage.

Usage: python3 scripts/census_report.py [--n 3] [--max 40] [--jobs 1]

Prints one row per tail start M with the number of primitive maximal sets
found and how many of them the reflection construction reaches; the open
question is whether the last column is ever nonzero for some n.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from chordsets.integer_sets import enumerate_census


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--max", type=int, default=40)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.time()
    entries = enumerate_census(args.n, args.max, jobs=args.jobs)
    dt = time.time() - t0

    by_m: dict = {}
    for e in entries:
        row = by_m.setdefault(e.max_endpoint, [0, 0])
        row[0] += 1
        row[1] += 0 if e.picksinwn_origin else 1
    print(f"n={args.n} tail<= {args.max}: {len(entries)} sets in {dt:.2f}s")
    print(f"{'M':>4} {'count':>6} {'unreached':>10}")
    for m in sorted(by_m):
        count, unreached = by_m[m]
        print(f"{m:>4} {count:>6} {unreached:>10}")
    total_unreached = sum(v[1] for v in by_m.values())
    print(f"outside the reflection construction: {total_unreached}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
