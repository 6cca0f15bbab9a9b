"""Reed-Solomon codes defined by their spectra, and the virtual extension.

A codeword is the inverse transform of a spectrum whose coefficients
``k..n-1`` vanish.  Raising a word componentwise to the ``i``-th power maps
``RS(q; n, k)`` into ``RS(q; n, i(k-1)+1)``, which is what makes the
extra syndrome sequences available.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import _kernels
from .gf_field import FieldError, FieldSpec
from .spectral import as_poly, dft, idft


@dataclass(frozen=True, eq=False)
class RsCode:
    field: FieldSpec
    n: int
    k: int
    alpha: int = dc_field(default=None)

    def __post_init__(self):
        q1 = self.field.q - 1
        if self.n < 2 or q1 % self.n:
            raise FieldError(f"code length {self.n} must divide q-1 = {q1}")
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if self.alpha is None:
            object.__setattr__(self, "alpha", self.field.root_of_unity(self.n))
        elif self.field.element_order(self.alpha) != self.n:
            raise FieldError(f"alpha={self.alpha} does not have order {self.n}")

    @classmethod
    def from_params(cls, m: int, n: int, k: int, prim_poly: int | None = None) -> "RsCode":
        return cls(FieldSpec(m, prim_poly), n, k)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def tau(self) -> int:
        return (self.n - self.k) // 2

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def step(self) -> int:
        """Discrete log of alpha."""
        return int(self.field.log[self.alpha])

    @property
    def scale(self) -> int:
        """``n^-1`` as a field element."""
        return self.field.inv(self.field.scalar(self.n))

    def __repr__(self):
        return f"RS(2^{self.field.m}; {self.n}, {self.k})"


@dataclass(frozen=True)
class SyndromeSet:
    """Syndrome sequences of the rows ``y^(1) .. y^(l)``.

    ``sequences[i-1]`` has length ``n - i(k-1) - 1``.
    """

    sequences: tuple

    @property
    def lengths(self) -> tuple:
        return tuple(len(s) for s in self.sequences)

    def __len__(self):
        return len(self.sequences)

    def is_zero(self) -> bool:
        return all(not np.any(s) for s in self.sequences)


def encode(code: RsCode, info) -> np.ndarray:
    """Codeword whose spectrum is ``info`` followed by ``n-k`` zeros."""
    spectrum = as_poly(info)
    if spectrum.shape[0] > code.k:
        if np.any(spectrum[code.k :]):
            raise ValueError(f"information word has more than k={code.k} symbols")
        spectrum = spectrum[: code.k]
    if np.any((spectrum < 0) | (spectrum >= code.q)):
        raise FieldError("information symbol out of range")
    return idft(code.field, as_poly(spectrum, code.n), code.alpha, code.n)


def encode_batch(code: RsCode, info: np.ndarray) -> np.ndarray:
    """Encode each row of a ``B x k`` array."""
    q1 = code.q - 1
    info = np.ascontiguousarray(info, dtype=np.int64)
    return _kernels.encode_batch(
        info, code.n, code.field.exp, code.field.log, q1, (q1 - code.step) % q1, code.scale
    )


def is_codeword(code: RsCode, c) -> bool:
    word = as_poly(c)
    if word.shape[0] != code.n:
        return False
    spectrum = dft(code.field, word, code.alpha, code.n)
    return not np.any(spectrum[code.k :])


def power_word(field: FieldSpec, y, i: int) -> np.ndarray:
    """Componentwise ``i``-th power ``(y_0^i, ..., y_{n-1}^i)``."""
    if i < 1:
        raise ValueError("power must be >= 1")
    word = as_poly(y)
    return np.array([field.pow(int(v), i) for v in word], dtype=np.int64)


def syndromes(code: RsCode, y, l: int) -> SyndromeSet:
    """Last ``n - i(k-1) - 1`` spectral coefficients of ``y^(i)`` for ``i <= l``."""
    if l < 1 or l * (code.k - 1) + 1 > code.n - 1:
        # row l must keep at least one coefficient
        raise ValueError(f"l={l} violates l(k-1)+1 <= n-1 for {code!r}")
    word = as_poly(y, code.n)
    f = code.field
    seqs, lengths = _kernels.syndrome_rows(word, code.n, code.k, l, f.exp, f.log, f.q - 1, code.step)
    return SyndromeSet(tuple(seqs[h, : lengths[h]].copy() for h in range(l)))


def mds_weight_count(n: int, k: int, q: int, w: int) -> int:
    """Codewords of weight ``w`` in any ``[n, k]`` MDS code over GF(q)."""
    d = n - k + 1
    if w == 0:
        return 1
    if w < d or w > n:
        return 0
    total = sum((-1) ** j * comb(w - 1, j) * q ** (w - d - j) for j in range(w - d + 1))
    return comb(n, w) * (q - 1) * total


def weight_distribution(code: RsCode, w: int) -> int:
    """Number of codewords of Hamming weight ``w``."""
    return mds_weight_count(code.n, code.k, code.q, w)
