"""Word error rate over a q-ary symmetric channel, both decoders, with the bound when it exists.

Shared by qsc_rs255_63.py and qsc_rs255_38.py.
"""

import csv

from rsbeyond.bounds import BoundUnavailable, p_w_qsc
from rsbeyond.decoder import decoder_params
from rsbeyond.sim import mc_qsc


def sweep(code, ps, N, seed, workers, out):
    params = decoder_params(code)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["p", "wer_bmd", "wer_extended", "ext_ci_high", "p_w_qsc_bound"])
    for p in ps:
        bmd = mc_qsc(code, "bmd", p, N, seed, workers)
        ext = mc_qsc(code, "extended", p, N, seed, workers)
        try:
            bound = p_w_qsc(code, params, p).sci(3)
        except BoundUnavailable:
            bound = "n/a"
        w.writerow([f"{p:g}", f"{bmd.rate_w:.3e}", f"{ext.rate_w:.3e}", f"{ext.interval('w')[1]:.3e}", bound])
        out.flush()
