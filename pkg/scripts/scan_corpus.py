"""Scan every corpus member and tabulate the headline numbers.

Usage: python3 scripts/scan_corpus.py [--ell-res 1e-3] [--out-dir DIR]

With --out-dir, the full JSON report of each member is written to
DIR/<name>.json for external plotting.
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from chordsets.functions import corpus
from chordsets.scan import measure_check, scan, sign_changes


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--ell-res", type=float, default=1e-3)
    ap.add_argument("--out-dir", default=None)
    args = ap.parse_args()

    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)

    print(f"{'member':<12} {'measure':>8} {'signchg':>8} {'time':>7}  h_star bands")
    for name, spec in corpus():
        t0 = time.time()
        report = scan(spec, ell_res=args.ell_res)
        dt = time.time() - t0
        bands = " ".join(f"({a:.4f},{b:.4f})" for a, b in report.h_star_approx)
        print(f"{name:<12} {measure_check(report):>8.4f} {sign_changes(spec):>8} {dt:>6.2f}s  {bands}")
        if args.out_dir:
            path = os.path.join(args.out_dir, f"{name.replace(':', '_')}.json")
            with open(path, "w") as fh:
                json.dump(report.to_json(), fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
