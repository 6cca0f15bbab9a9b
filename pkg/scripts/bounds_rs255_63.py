"""log10 of the error, failure and word-error bounds for RS(2^8; 255, 63), t = 97..107."""

import argparse
import csv
import sys

from rsbeyond.bounds import p_e_bound, p_f_bound, p_w_t
from rsbeyond.decoder import decoder_params
from rsbeyond.rs_codec import RsCode


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    code = RsCode.from_params(8, 255, 63)
    params = decoder_params(code)
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow(["t", "log10_p_e_bound", "log10_p_f_bound", "log10_p_w_t"])
    for t in range(params.tau + 1, params.t_max + 1):
        pe = p_e_bound(code, params, t)
        pf = p_f_bound(code, params, t)
        w.writerow([t, f"{pe.log10():.6g}", f"{pf.log10():.6g}", f"{p_w_t(code, params, t).log10():.6g}"])


if __name__ == "__main__":
    main()
