"""Agreement table for the sine-sum conjecture at scan resolution.

Usage: python3 scripts/conjecture_k_table.py [--n-max 5] [--ell-res 1e-3]

For each n the scanner compares H(g_n) presence against the canonical
n-component set, skipping a margin around component boundaries. Any
disagreement is printed with its grid value; at the resolutions this script
can reach, disagreements are findings to inspect, not proof either way.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from chordsets.scan import conjecture_k_compare


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--ell-res", type=float, default=1e-3)
    ap.add_argument("--margin", type=float, default=0.01)
    args = ap.parse_args()

    print(f"{'n':>3} {'checked':>8} {'agree':>8} {'rate':>8} {'time':>7}")
    for n in range(1, args.n_max + 1):
        t0 = time.time()
        rep = conjecture_k_compare(n, ell_res=args.ell_res, margin=args.margin)
        dt = time.time() - t0
        print(f"{n:>3} {rep.total:>8} {rep.agree:>8} {rep.agreement:>8.4f} {dt:>6.2f}s")
        for ell in rep.disagreements:
            print(f"      disagreement at ell = {ell}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
