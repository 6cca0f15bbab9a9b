"""QSC word error rate of RS(2^8; 255, 63): BMD against two-row extension.

    python scripts/qsc_rs255_63.py --N 1e5 --p 0.26 0.28 0.30 0.32
"""

import argparse
import sys

from qsc_sweep import sweep
from rsbeyond.cli import trial_count, probability
from rsbeyond.rs_codec import RsCode


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=trial_count, default=10**5)
    ap.add_argument("--p", type=probability, nargs="+", default=[0.26, 0.28, 0.30, 0.32, 0.34])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()
    sweep(RsCode.from_params(8, 255, 63), args.p, args.N, args.seed, args.workers, args.out)


if __name__ == "__main__":
    main()
