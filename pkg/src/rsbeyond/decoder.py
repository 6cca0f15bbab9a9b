"""Decoding beyond half the minimum distance by syndrome extension.

The received word ``y`` is raised componentwise to the powers ``1..l``;
each power is a corrupted codeword of a larger RS code with the same
error columns, so every row contributes a syndrome sequence.  One shared
error locator is synthesized from all of them, accepted only if it is
``t``-valid, and the error values follow by recursive extension of the
first-row spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .rs_codec import RsCode, is_codeword
from .shiftreg import ConnectionPoly
from .spectral import as_poly

REASONS = {
    _kernels.STATUS_NOT_T_VALID: "not_t_valid",
    _kernels.STATUS_T_EXCEEDS_RADIUS: "t_exceeds_radius",
    _kernels.STATUS_SUPPORT_MISMATCH: "support_mismatch",
    _kernels.STATUS_RESIDUAL_NOT_CODEWORD: "residual_not_codeword",
}


class SupportMismatch(ArithmeticError):
    """Evaluated error word is not supported exactly on the located positions."""


def _check_eq5(n: int, k: int, l: int):
    if l < 1 or l * (k - 1) + 1 > n:
        raise ValueError(f"l={l} violates l(k-1)+1 <= n for n={n}, k={k}")


def t_max_l(n: int, k: int, l: int) -> int:
    """Decoding radius when ``l`` syndrome rows are used."""
    _check_eq5(n, k, l)
    return (2 * l * n - l * (l + 1) * k + l * (l - 1)) // (2 * (l + 1))


def select_l(n: int, k: int) -> int:
    """Largest ``l`` whose last syndrome row is long enough to be useful."""
    l = 1
    while True:
        nxt = l + 1
        if nxt * (k - 1) + 1 > n:
            return l
        if t_max_l(n, k, l) + 2 > n - nxt * (k - 1) - 1:
            return l
        l = nxt


def threshold_rate(n: int, l: int) -> Fraction:
    """Approximate largest rate at which ``l`` rows can be used (floor dropped)."""
    if l < 2:
        raise ValueError("threshold rate is defined for l >= 2")
    return Fraction(2, l * (l + 1)) + Fraction(l * l - 3 * l - 2, n * l * (l + 1))


def l_closed_form(n: int, k: int) -> int:
    """Closed-form lower estimate of the usable number of rows."""
    if k < 2:
        raise ValueError("closed form needs k >= 2")
    b = k + 3
    disc = b * b + 8 * (k - 1) * (n - 1)
    # floor((sqrt(D) - b) / c) == floor((isqrt(D) - b) / c) for integer b, c
    return (math.isqrt(disc) - b) // (2 * (k - 1))


@dataclass(frozen=True)
class DecoderParams:
    l: int
    t_max: int
    tau: int


def decoder_params(code: RsCode) -> DecoderParams:
    l = select_l(code.n, code.k)
    return DecoderParams(l=l, t_max=t_max_l(code.n, code.k, l), tau=code.tau)


def bmd_params(code: RsCode) -> DecoderParams:
    return DecoderParams(l=1, t_max=code.tau, tau=code.tau)


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """Outcome of one decoding attempt.

    On success ``codeword + error == received``; on failure ``reason`` names
    the check that rejected the word and ``codeword``/``error`` are None.
    """

    reason: str | None = None
    codeword: np.ndarray | None = None
    error: np.ndarray | None = None
    t: int | None = None

    @property
    def ok(self) -> bool:
        return self.reason is None

    def __repr__(self):
        if self.ok:
            return f"DecodeResult(ok, t={self.t})"
        return f"DecodeResult(failure={self.reason}, t={self.t})"


def root_positions(code: RsCode, lam: ConnectionPoly) -> list[int]:
    """Positions ``j < n`` with ``Lambda(alpha^-j) = 0``."""
    f = code.field
    buf = np.empty(code.n, dtype=np.int64)
    padded = lam.padded(max(lam.t, lam.degree) + 1)
    found = _kernels.locate(padded, lam.degree, code.n, f.exp, f.log, f.q - 1, code.step, buf)
    return [int(j) for j in buf[:found]]


def is_t_valid(lam: ConnectionPoly, t: int, code: RsCode) -> bool:
    """Degree exactly ``t`` with ``t`` distinct roots among ``alpha^-j``."""
    if lam.degree != t:
        return False
    return len(root_positions(code, lam)) == t


def evaluate_errors(code: RsCode, synd1, lam: ConnectionPoly, t: int) -> np.ndarray:
    """Error word from the first syndrome row by recursive extension."""
    synd1 = as_poly(synd1)
    if synd1.shape[0] != code.n - code.k:
        raise ValueError(f"first syndrome row must have n-k={code.n - code.k} entries")
    if t == 0:
        return np.zeros(code.n, dtype=np.int64)
    f = code.field
    err = _kernels.evaluate_kernel(
        synd1, lam.padded(t + 1), t, code.n, code.k, f.exp, f.log, f.q - 1, code.step, code.scale
    )
    expected = root_positions(code, lam)
    if sorted(np.flatnonzero(err).tolist()) != expected:
        raise SupportMismatch(f"error support {np.flatnonzero(err).tolist()} != roots {expected}")
    return err


def _decode(code: RsCode, y, params: DecoderParams) -> DecodeResult:
    word = as_poly(y)
    if word.shape[0] != code.n:
        raise ValueError(f"received word must have length {code.n}, got {word.shape[0]}")
    if np.any((word < 0) | (word >= code.q)):
        raise ValueError("received symbol out of range")
    f = code.field
    status, t, err = _kernels.decode_word(
        word, code.n, code.k, params.l, params.t_max, f.exp, f.log, f.q - 1, code.step, code.scale
    )
    if status != _kernels.STATUS_OK:
        return DecodeResult(reason=REASONS[status], t=int(t))
    chat = word ^ err
    if not is_codeword(code, chat):
        return DecodeResult(reason="residual_not_codeword", t=int(t))
    return DecodeResult(codeword=chat, error=err, t=int(t))


def decode(code: RsCode, y, params: DecoderParams | None = None) -> DecodeResult:
    """Decode ``y`` using all usable syndrome rows."""
    return _decode(code, y, params or decoder_params(code))


def bmd_decode(code: RsCode, y) -> DecodeResult:
    """Classical decoding up to ``tau`` from the first syndrome row only."""
    return _decode(code, y, bmd_params(code))

