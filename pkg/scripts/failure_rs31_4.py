"""Failure probability of RS(2^5; 31, 4), three syndrome rows, t = 14..18.

No analytical failure bound exists for three rows, so only the simulated
counts are reported.

    python scripts/failure_rs31_4.py --N 1e6
"""

import argparse
import csv
import sys

from rsbeyond.cli import trial_count
from rsbeyond.rs_codec import RsCode
from rsbeyond.sim import mc_fixed_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=trial_count, default=10**6)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    code = RsCode.from_params(5, 31, 4)
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow(["t", "N", "N_f", "N_e", "P_f", "ci_low", "ci_high"])
    for t in range(14, 19):
        r = mc_fixed_weight(code, "extended", t, args.N, args.seed, args.workers)
        lo, hi = r.interval("f")
        w.writerow([t, r.N, r.n_failure, r.n_error, f"{r.rate_f:.3e}", f"{lo:.3e}", f"{hi:.3e}"])
        args.out.flush()


if __name__ == "__main__":
    main()
