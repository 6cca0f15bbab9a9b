"""QSC word error rate of RS(2^8; 255, 38): BMD against three-row extension.

There is no failure bound for three rows, so the bound column reads n/a.

    python scripts/qsc_rs255_38.py --N 1e5 --p 0.36 0.40 0.44
"""

import argparse
import sys

from qsc_sweep import sweep
from rsbeyond.cli import trial_count, probability
from rsbeyond.rs_codec import RsCode


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=trial_count, default=10**5)
    ap.add_argument("--p", type=probability, nargs="+", default=[0.36, 0.38, 0.40, 0.42, 0.44])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()
    sweep(RsCode.from_params(8, 255, 38), args.p, args.N, args.seed, args.workers, args.out)


if __name__ == "__main__":
    main()
