"""Monte-Carlo harness: fixed-weight error ensembles and the q-ary symmetric channel.

Trials are grouped into blocks of ``BLOCK_SIZE``.  Block ``b`` draws all of
its randomness from ``Generator(Philox(SeedSequence(master_seed,
spawn_key=(b,))))`` in a fixed order (information symbols, then the
channel), so counts depend only on ``(config, master_seed, N)`` and never on
how many workers process the blocks.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import NormalDist

import numpy as np

from . import _kernels
from .decoder import DecoderParams, bmd_params, decoder_params
from .rs_codec import RsCode, encode_batch

BLOCK_SIZE = 2048
DECODERS = ("extended", "bmd")


def block_rng(master_seed: int, block: int) -> np.random.Generator:
    seq = np.random.SeedSequence(master_seed, spawn_key=(block,))
    return np.random.Generator(np.random.Philox(seq))


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    z = NormalDist().inv_cdf(1 - (1 - confidence) / 2)
    phat = successes / trials
    denom = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * np.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    # the limits are exact at the ends; rounding would leave ~1e-19 there
    lo = 0.0 if successes == 0 else max(0.0, centre - half)
    hi = 1.0 if successes == trials else min(1.0, centre + half)
    return lo, hi


@dataclass(frozen=True)
class QscConfig:
    p: float
    master_seed: int = 0

    def __post_init__(self):
        if not 0 <= self.p <= 1:
            raise ValueError("crossover probability must lie in [0, 1]")


@dataclass
class TrialReport:
    code: str
    decoder: str
    t_or_p: float
    N: int
    n_correct: int
    n_error: int
    n_failure: int
    master_seed: int
    wall_time: float = field(default=0.0, compare=False)
    ci_target: str = "w"

    def __post_init__(self):
        if self.n_correct + self.n_error + self.n_failure != self.N:
            raise ValueError("counts do not add up to N")

    @property
    def rate_f(self) -> float:
        return self.n_failure / self.N

    @property
    def rate_e(self) -> float:
        return self.n_error / self.N

    @property
    def rate_c(self) -> float:
        return self.n_correct / self.N

    @property
    def rate_w(self) -> float:
        return (self.n_error + self.n_failure) / self.N

    def interval(self, which: str | None = None, confidence: float = 0.95) -> tuple[float, float]:
        which = which or self.ci_target
        count = {
            "w": self.n_error + self.n_failure,
            "f": self.n_failure,
            "e": self.n_error,
        }[which]
        return wilson_interval(count, self.N, confidence)

    def counts(self) -> tuple[int, int, int]:
        return self.n_correct, self.n_error, self.n_failure


# -- channels -------------------------------------------------------------


def _qsc_noise(rng: np.random.Generator, shape, p: float, q: int) -> np.ndarray:
    flips = rng.random(shape) < p
    # XOR with a uniform nonzero symbol picks a uniform *different* symbol
    offsets = rng.integers(1, q, size=shape, dtype=np.int64)
    return np.where(flips, offsets, 0)


def _fixed_weight_noise(rng: np.random.Generator, count: int, n: int, t: int, q: int) -> np.ndarray:
    err = np.zeros((count, n), dtype=np.int64)
    if t == 0:
        return err
    keys = rng.random((count, n))
    support = np.argpartition(keys, t - 1, axis=1)[:, :t]
    values = rng.integers(1, q, size=(count, t), dtype=np.int64)
    np.put_along_axis(err, support, values, axis=1)
    return err


def qsc_corrupt(word, p: float, rng: np.random.Generator, q: int) -> np.ndarray:
    """Pass ``word`` through a q-ary symmetric channel with crossover ``p``."""
    word = np.asarray(word, dtype=np.int64)
    return word ^ _qsc_noise(rng, word.shape, p, q)


def fixed_weight_error(n: int, t: int, rng: np.random.Generator, q: int) -> np.ndarray:
    """Error word with uniformly placed support of size ``t`` and uniform nonzero values."""
    if not 0 <= t <= n:
        raise ValueError(f"weight {t} not in [0, {n}]")
    return _fixed_weight_noise(rng, 1, n, t, q)[0]


# -- trial blocks ---------------------------------------------------------


@dataclass(frozen=True)
class _Job:
    m: int
    prim_poly: int
    n: int
    k: int
    decoder: str
    mode: str  # "weight" or "qsc"
    param: float
    master_seed: int
    zero_codeword: bool


def _params_for(code: RsCode, decoder: str) -> DecoderParams:
    if decoder == "extended":
        return decoder_params(code)
    if decoder == "bmd":
        return bmd_params(code)
    raise ValueError(f"unknown decoder {decoder!r}; choose from {DECODERS}")


def simulate_block(job: _Job, block: int, count: int) -> tuple[int, int, int]:
    """Run ``count`` trials of block ``block``; returns (correct, error, failure)."""
    code = RsCode.from_params(job.m, job.n, job.k, job.prim_poly)
    params = _params_for(code, job.decoder)
    rng = block_rng(job.master_seed, block)
    if job.zero_codeword:
        sent = np.zeros((count, code.n), dtype=np.int64)
        rng.integers(0, code.q, size=(count, code.k))  # keep the stream aligned
    else:
        sent = encode_batch(code, rng.integers(0, code.q, size=(count, code.k), dtype=np.int64))
    if job.mode == "weight":
        noise = _fixed_weight_noise(rng, count, code.n, int(job.param), code.q)
    else:
        noise = _qsc_noise(rng, (count, code.n), job.param, code.q)
    received = sent ^ noise
    f = code.field
    status, _, decoded = _kernels.decode_batch(
        received, code.n, code.k, params.l, params.t_max, f.exp, f.log, f.q - 1, code.step, code.scale
    )
    ok = status == _kernels.STATUS_OK
    correct = ok & np.all(decoded == sent, axis=1)
    n_c = int(correct.sum())
    n_e = int(ok.sum()) - n_c
    return n_c, n_e, count - n_c - n_e


def _run_block(args):
    job, block, count = args
    return simulate_block(job, block, count)


def _run(job: _Job, N: int, workers: int) -> tuple[int, int, int]:
    if N < 1:
        raise ValueError("N must be >= 1")
    tasks = []
    for block, start in enumerate(range(0, N, BLOCK_SIZE)):
        tasks.append((job, block, min(BLOCK_SIZE, N - start)))
    if workers <= 1:
        results = map(_run_block, tasks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_block, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    totals = np.zeros(3, dtype=np.int64)
    for r in results:
        totals += r
    return int(totals[0]), int(totals[1]), int(totals[2])


def _job(code: RsCode, decoder: str, mode: str, param: float, master_seed: int, zero_codeword: bool) -> _Job:
    _params_for(code, decoder)
    return _Job(
        code.field.m, code.field.prim_poly, code.n, code.k, decoder, mode, param, int(master_seed), zero_codeword
    )


def mc_fixed_weight(
    code: RsCode,
    decoder: str,
    t: int,
    N: int,
    master_seed: int,
    workers: int = 1,
    zero_codeword: bool = False,
) -> TrialReport:
    """Decode ``N`` random codewords hit by exactly ``t`` errors."""
    if not 0 <= t <= code.n:
        raise ValueError(f"weight {t} not in [0, {code.n}]")
    start = time.perf_counter()
    counts = _run(_job(code, decoder, "weight", t, master_seed, zero_codeword), N, workers)
    return TrialReport(repr(code), decoder, t, N, *counts, master_seed, time.perf_counter() - start, ci_target="f")


def mc_qsc(
    code: RsCode,
    decoder: str,
    p: float,
    N: int,
    master_seed: int,
    workers: int = 1,
    zero_codeword: bool = False,
) -> TrialReport:
    """Decode ``N`` random codewords sent over a QSC with crossover ``p``."""
    cfg = QscConfig(p, master_seed)
    start = time.perf_counter()
    counts = _run(_job(code, decoder, "qsc", cfg.p, master_seed, zero_codeword), N, workers)
    return TrialReport(repr(code), decoder, p, N, *counts, master_seed, time.perf_counter() - start, ci_target="w")


CSV_COLUMNS = ("code", "decoder", "t_or_p", "N", "N_c", "N_e", "N_f", "rate_w", "rate_f", "rate_e", "ci_low", "ci_high", "seed")


def report_row(r: TrialReport) -> list[str]:
    lo, hi = r.interval()
    return [
        r.code,
        r.decoder,
        f"{r.t_or_p:g}",
        str(r.N),
        str(r.n_correct),
        str(r.n_error),
        str(r.n_failure),
        f"{r.rate_w:.6e}",
        f"{r.rate_f:.6e}",
        f"{r.rate_e:.6e}",
        f"{lo:.6e}",
        f"{hi:.6e}",
        str(r.master_seed),
    ]
