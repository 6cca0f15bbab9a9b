"""Exact upper bounds on error, failure and word-error probability.

Everything is computed with :class:`fractions.Fraction`; the error bound
for ``RS(2^8; 255, 63)`` sits hundreds of decades below the failure bound,
far outside the range of a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache, total_ordering

from .decoder import DecoderParams, decoder_params
from .rs_codec import RsCode, mds_weight_count


class BoundUnavailable(ValueError):
    """The failure bound is only established for two syndrome rows."""


@total_ordering
@dataclass(frozen=True)
class BigProb:
    """Nonnegative exact rational with decimal/log10 rendering."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        if v < 0:
            raise ValueError("probability must be nonnegative")
        object.__setattr__(self, "value", v)

    def __float__(self):
        return float(self.value)

    def __add__(self, other):
        return BigProb(self.value + _frac(other))

    __radd__ = __add__

    def __mul__(self, other):
        return BigProb(self.value * _frac(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return BigProb(self.value / _frac(other))

    def __eq__(self, other):
        return self.value == _frac(other)

    def __lt__(self, other):
        return self.value < _frac(other)

    def __hash__(self):
        return hash(self.value)

    def to_decimal(self, prec: int = 40) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec
            return Decimal(self.value.numerator) / Decimal(self.value.denominator)

    def log10(self) -> float:
        if self.value == 0:
            return -math.inf
        with localcontext() as ctx:
            ctx.prec = 40
            return float(self.to_decimal(50).log10())

    def sci(self, digits: int = 6) -> str:
        """Decimal scientific notation with ``digits`` significant digits."""
        if self.value == 0:
            return "0"
        return f"{self.to_decimal(digits + 10):.{digits - 1}E}"

    def __repr__(self):
        return f"BigProb({self.sci(3)})"


def _frac(x) -> Fraction:
    return x.value if isinstance(x, BigProb) else Fraction(x)


def gamma(q: int) -> Fraction:
    return Fraction(q, q - 1) + Fraction(1, q)


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def u_q(r2: int, r1: int, rho: int, n: int, q: int) -> int:
    """Number of weight-``r2`` words at distance exactly ``rho`` from a fixed
    word of weight ``r1`` in GF(q)^n."""
    total = 0
    lo = -(-(r1 + r2 - rho) // 2)
    for i in range(max(lo, 0), r1 + r2 - rho + 1):
        differing = rho - (r1 + r2) + 2 * i
        term = _binom(r1, i) * _binom(i, differing) * _binom(n - r1, r2 - i)
        if term:
            total += term * (q - 2) ** differing * (q - 1) ** (r2 - i)
    return total


def _params(code: RsCode, params: DecoderParams | None) -> DecoderParams:
    return params or decoder_params(code)


@lru_cache(maxsize=4096)
def _p_e(n: int, k: int, q: int, t_max: int, t: int) -> Fraction:
    num = 0
    for w in range(n - k + 1, min(t + t_max, n) + 1):
        a_w = mds_weight_count(n, k, q, w)
        if a_w:
            num += a_w * sum(u_q(t, w, rho, n, q) for rho in range(min(t, t_max) + 1))
    return Fraction(num, math.comb(n, t) * (q - 1) ** t)


def p_e_bound(code: RsCode, params: DecoderParams | None, t: int) -> BigProb:
    """Bound on the probability of decoding to a wrong codeword at weight ``t``."""
    p = _params(code, params)
    if not p.tau < t <= p.t_max:
        raise ValueError(f"t={t} outside ({p.tau}, {p.t_max}]")
    return BigProb(_p_e(code.n, code.k, code.q, p.t_max, t))


def p_f_bound(code: RsCode, params: DecoderParams | None, t: int) -> BigProb:
    """Bound on the failure probability at weight ``t`` (two rows only)."""
    p = _params(code, params)
    if p.l != 2:
        raise BoundUnavailable(f"no analytical failure bound for l={p.l} (needs l=2)")
    if not p.tau < t <= p.t_max:
        raise ValueError(f"t={t} outside ({p.tau}, {p.t_max}]")
    q = code.q
    return BigProb(gamma(q) ** t / Fraction(q ** (3 * (p.t_max - t))) / (q - 1))


def p_w_t(code: RsCode, params: DecoderParams | None, t: int) -> BigProb:
    """Bound on the probability of an incorrect result at weight ``t``."""
    p = _params(code, params)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t <= p.tau:
        return BigProb(0)
    if t > p.t_max:
        return BigProb(1)
    total = p_e_bound(code, p, t) + p_f_bound(code, p, t)
    return min(total, BigProb(1))


def p_w_qsc(code: RsCode, params: DecoderParams | None, p) -> BigProb:
    """Word-error bound on a q-ary symmetric channel with crossover ``p``."""
    pp = _params(code, params)
    p = Fraction(str(p)) if isinstance(p, float) else Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("crossover probability must lie in [0, 1]")
    n = code.n
    total = Fraction(0)
    for t in range(pp.tau + 1, n + 1):
        pw = p_w_t(code, pp, t).value
        if pw:
            total += math.comb(n, t) * pw * p**t * (1 - p) ** (n - t)
    return BigProb(total)
