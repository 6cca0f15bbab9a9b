"""Command-line front end.

Words are ASCII decimal symbols separated by single spaces, one word per
line.  Exit codes: 0 success, 1 usage or input error, 2 decoding failure
(``decode`` only).
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import BoundUnavailable, p_e_bound, p_f_bound, p_w_qsc, p_w_t
from .decoder import bmd_decode, decode, decoder_params, l_closed_form, t_max_l, threshold_rate
from .gf_field import FieldError
from .rs_codec import RsCode, encode
from .sim import CSV_COLUMNS, DECODERS, block_rng, fixed_weight_error, mc_fixed_weight, mc_qsc, qsc_corrupt, report_row

UNAVAILABLE = "bound unavailable (l≠2)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    m: int
    n: int
    k: int
    command: str
    prim_poly: int | None = None
    seed: int = 0
    out: str | None = None
    options: dict = field(default_factory=dict)

    def code(self) -> RsCode:
        return RsCode.from_params(self.m, self.n, self.k, self.prim_poly)


# -- argument types --------------------------------------------------------


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex integer: {text!r}") from None


def trial_count(text: str) -> int:
    """Trial count written as an exact integer, e.g. '1000000' or '1e6'."""
    try:
        value = int(text)
    except ValueError:
        try:
            value = Fraction(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a trial count: {text!r}") from None
        if value.denominator != 1:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        value = int(value)
    if value < 1:
        raise argparse.ArgumentTypeError("N must be >= 1")
    return value


def probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability {text} outside [0, 1]")
    return p


# -- io --------------------------------------------------------------------


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _read_words(path, q: int, length: int | None = None) -> list[np.ndarray]:
    if path is None or path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path) as fh:
            lines = fh.read().splitlines()
    words = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            word = [int(tok) for tok in line.split()]
        except ValueError:
            raise UsageError(f"line {lineno}: malformed symbol") from None
        if any(s < 0 or s >= q for s in word):
            raise UsageError(f"line {lineno}: symbol out of range 0..{q - 1}")
        if length is not None and len(word) != length:
            raise UsageError(f"line {lineno}: expected {length} symbols, got {len(word)}")
        words.append(np.array(word, dtype=np.int64))
    return words


def _fmt_word(word) -> str:
    return " ".join(str(int(s)) for s in word)


# -- commands --------------------------------------------------------------


def cmd_params(cfg: RunConfig, out) -> int:
    code = cfg.code()
    n, k = code.n, code.k
    params = decoder_params(code)
    print(f"code {code!r}", file=out)
    print(f"n {n}", file=out)
    print(f"k {k}", file=out)
    print(f"d {code.d}", file=out)
    print(f"tau {code.tau}", file=out)
    print(f"l {params.l}", file=out)
    print(f"l_closed_form {l_closed_form(n, k) if k >= 2 else 'n/a'}", file=out)
    print(f"t_max {params.t_max}", file=out)
    for i in range(1, params.l + 1):
        rth = f" R_th {float(threshold_rate(n, i)):.6f}" if i >= 2 else ""
        print(f"t_max[{i}] {t_max_l(n, k, i)}{rth}", file=out)
    return 0


def cmd_encode(cfg: RunConfig, out) -> int:
    code = cfg.code()
    for info in _read_words(cfg.options["input"], code.q, code.k):
        print(_fmt_word(encode(code, info)), file=out)
    return 0


def cmd_corrupt(cfg: RunConfig, out) -> int:
    code = cfg.code()
    mode = cfg.options["mode"]
    for idx, word in enumerate(_read_words(cfg.options["input"], code.q, code.n)):
        rng = block_rng(cfg.seed, idx)
        if mode == "qsc":
            if cfg.options["p"] is None:
                raise UsageError("--mode qsc needs --p")
            y = qsc_corrupt(word, cfg.options["p"][0], rng, code.q)
        else:
            if cfg.options["t"] is None:
                raise UsageError("--mode weight needs --t")
            y = word ^ fixed_weight_error(code.n, cfg.options["t"][0], rng, code.q)
        print(_fmt_word(y), file=out)
    return 0


def cmd_decode(cfg: RunConfig, out) -> int:
    code = cfg.code()
    run = bmd_decode if cfg.options["decoder"] == "bmd" else decode
    status = 0
    for y in _read_words(cfg.options["input"], code.q, code.n):
        result = run(code, y)
        if result.ok:
            print(_fmt_word(result.codeword), file=out)
            print(f"OK t={result.t}", file=out)
        else:
            print(f"FAILURE {result.reason}", file=out)
            status = 2
    return status


def _log10_cell(x) -> str:
    return f"{x.log10():.6g}"


def cmd_bounds(cfg: RunConfig, out) -> int:
    code = cfg.code()
    params = decoder_params(code)
    writer = csv.writer(out, lineterminator="\n")
    if cfg.options["p"]:
        writer.writerow(["p", "p_w_qsc", "log10_p_w_qsc"])
        for p in cfg.options["p"]:
            try:
                b = p_w_qsc(code, params, p)
                writer.writerow([f"{p:g}", b.sci(6), _log10_cell(b)])
            except BoundUnavailable:
                writer.writerow([f"{p:g}", UNAVAILABLE, UNAVAILABLE])
        return 0
    writer.writerow(["t", "p_f_bound", "log10_p_f_bound", "p_e_bound", "log10_p_e_bound", "p_w_t", "log10_p_w_t"])
    ts = cfg.options["t"] or range(params.tau + 1, params.t_max + 1)
    for t in ts:
        if not params.tau < t <= params.t_max:
            raise UsageError(f"t={t} outside ({params.tau}, {params.t_max}]")
        pe = p_e_bound(code, params, t)
        try:
            pf = p_f_bound(code, params, t)
            pw = p_w_t(code, params, t)
            pf_cells = [pf.sci(6), _log10_cell(pf)]
            pw_cells = [pw.sci(6), _log10_cell(pw)]
        except BoundUnavailable:
            pf_cells = pw_cells = [UNAVAILABLE, UNAVAILABLE]
        writer.writerow([t, *pf_cells, pe.sci(6), _log10_cell(pe), *pw_cells])
    return 0


def _decoders(choice: str) -> tuple:
    return DECODERS if choice == "both" else (choice,)


def cmd_mc_failure(cfg: RunConfig, out) -> int:
    code = cfg.code()
    params = decoder_params(code)
    ts = cfg.options["t"] or range(params.tau + 1, params.t_max + 1)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    decoders = _decoders(cfg.options["decoder"] or "extended")
    for t in ts:
        for dec in decoders:
            r = mc_fixed_weight(
                code, dec, t, cfg.options["N"], cfg.seed, cfg.options["workers"], cfg.options["zero_codeword"]
            )
            writer.writerow(report_row(r))
            out.flush()
    return 0


def cmd_mc_qsc(cfg: RunConfig, out) -> int:
    code = cfg.code()
    if not cfg.options["p"]:
        raise UsageError("mc-qsc needs --p")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    decoders = _decoders(cfg.options["decoder"] or "both")
    for p in cfg.options["p"]:
        for dec in decoders:
            r = mc_qsc(code, dec, p, cfg.options["N"], cfg.seed, cfg.options["workers"], cfg.options["zero_codeword"])
            writer.writerow(report_row(r))
            out.flush()
    return 0


COMMANDS = {
    "params": cmd_params,
    "encode": cmd_encode,
    "corrupt": cmd_corrupt,
    "decode": cmd_decode,
    "bounds": cmd_bounds,
    "mc-failure": cmd_mc_failure,
    "mc-qsc": cmd_mc_qsc,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=int, required=True, help="field GF(2^m)")
    common.add_argument("--prim-poly", type=_hex, default=None, help="primitive polynomial, hex (default per m)")
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--k", type=int, required=True)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output file (default stdout)")

    parser = _Parser(prog="rsbeyond", description="RS decoding beyond half the minimum distance")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("params", parents=[common], help="decoder parameters")
    for name in ("encode", "corrupt", "decode"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", nargs="?", default="-", help="word file (default stdin)")
        if name == "corrupt":
            sp.add_argument("--mode", choices=("qsc", "weight"), default="qsc")
            sp.add_argument("--p", type=probability, nargs=1)
            sp.add_argument("--t", type=int, nargs=1)
        if name == "decode":
            sp.add_argument("--decoder", choices=DECODERS, default="extended")

    sp = sub.add_parser("bounds", parents=[common], help="analytical bounds as CSV")
    sp.add_argument("--t", type=int, nargs="+", help="weights (default: all of (tau, t_max])")
    sp.add_argument("--p", type=probability, nargs="+", help="QSC crossover probabilities instead of weights")

    for name in ("mc-failure", "mc-qsc"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--N", type=trial_count, default=10**6)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--decoder", choices=(*DECODERS, "both"), default=None)
        sp.add_argument("--zero-codeword", action="store_true", help="send the all-zero codeword")
        if name == "mc-failure":
            sp.add_argument("--t", type=int, nargs="+", help="weights (default: all of (tau, t_max])")
        else:
            sp.add_argument("--p", type=probability, nargs="+")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    base = {"m", "n", "k", "command", "prim_poly", "seed", "out"}
    cfg = RunConfig(
        m=args.m,
        n=args.n,
        k=args.k,
        command=args.command,
        prim_poly=args.prim_poly,
        seed=args.seed,
        out=args.out,
        options={key: val for key, val in vars(args).items() if key not in base},
    )
    try:
        with _output(cfg.out) as out:
            return COMMANDS[cfg.command](cfg, out)
    except (UsageError, FieldError, ValueError, OSError) as exc:
        print(f"rsbeyond {cfg.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
