"""Failure probability of RS(2^5; 31, 6) at t = 13..15: simulation next to the bound.

    python scripts/failure_rs31_6.py --N 1e6 --seed 1 --out failure_rs31_6.csv
"""

import argparse
import csv
import sys

from rsbeyond.bounds import p_f_bound
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

    code = RsCode.from_params(5, 31, 6)
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow(["t", "N", "N_f", "N_e", "P_f", "ci_low", "ci_high", "p_f_bound"])
    for t in (13, 14, 15):
        r = mc_fixed_weight(code, "extended", t, args.N, args.seed, args.workers)
        lo, hi = r.interval("f")
        w.writerow([t, r.N, r.n_failure, r.n_error, f"{r.rate_f:.3e}", f"{lo:.3e}", f"{hi:.3e}", p_f_bound(code, None, t).sci(2)])
        args.out.flush()


if __name__ == "__main__":
    main()
