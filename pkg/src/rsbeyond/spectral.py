"""Discrete Fourier transform over GF(q) of length n (n | q - 1).

Polynomials are 1-D int arrays of symbol values; index ``i`` holds the
coefficient of ``x^i``.  ``P_i = p(a^i)`` and ``p_i = n^-1 P(a^-i)``.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .gf_field import FieldError, FieldSpec

#: Degree of the zero polynomial.
NEG_INF = -math.inf


def as_poly(coeffs, length: int | None = None) -> np.ndarray:
    """Copy ``coeffs`` into an int64 array, zero-padded to ``length``."""
    a = np.asarray(coeffs, dtype=np.int64).ravel()
    if length is None:
        return a.copy()
    if a.shape[0] > length:
        if np.any(a[length:]):
            raise ValueError(f"polynomial has degree >= {length}")
        a = a[:length]
    out = np.zeros(length, dtype=np.int64)
    out[: a.shape[0]] = a
    return out


def degree(p) -> int | float:
    """Highest index with a nonzero coefficient; ``NEG_INF`` for zero."""
    nz = np.flatnonzero(np.asarray(p))
    return int(nz[-1]) if nz.size else NEG_INF


def weight(p) -> int:
    return int(np.count_nonzero(np.asarray(p)))


def _root_step(field: FieldSpec, alpha: int, n: int) -> int:
    if alpha == 0 or field.element_order(alpha) != n:
        raise FieldError(f"element {alpha} does not have order {n}")
    return int(field.log[alpha])


def dft(field: FieldSpec, p, alpha: int, n: int) -> np.ndarray:
    """Spectrum of ``p``: ``P_i = p(alpha^i)`` for ``i < n``."""
    step = _root_step(field, alpha, n)
    word = as_poly(p, n)
    return _kernels.transform(word, field.exp, field.log, field.q - 1, step, 1)


def idft(field: FieldSpec, P, alpha: int, n: int) -> np.ndarray:
    """Inverse transform: ``p_i = n^-1 P(alpha^-i)``."""
    step = _root_step(field, alpha, n)
    q1 = field.q - 1
    spec = as_poly(P, n)
    scale = field.inv(field.scalar(n))
    return _kernels.transform(spec, field.exp, field.log, q1, (q1 - step) % q1, scale)
