"""Shortest linear shift register generating several sequences of varying length.

All sequences share one connection polynomial ``Lambda`` (``Lambda_0 = 1``)
and one register length ``t``; sequence ``h`` must satisfy

    S_j + sum_{i=1..t} Lambda_i S_{j-i} = 0,   j = t .. m_h - 1.

Shorter sequences are right-aligned against the longest one during the
iteration, which is what keeps the result minimal when lengths differ.
With a single sequence this is the Berlekamp-Massey algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .gf_field import FieldSpec


@dataclass(frozen=True)
class SequenceBundle:
    """Sequences over one field, longest first.

    Empty sequences are dropped on construction since they impose no
    equations.
    """

    sequences: tuple

    def __init__(self, sequences):
        seqs = tuple(np.asarray(s, dtype=np.int64).ravel() for s in sequences)
        seqs = tuple(s for s in seqs if s.shape[0] > 0)
        lengths = [s.shape[0] for s in seqs]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"sequence lengths must be non-increasing, got {lengths}")
        object.__setattr__(self, "sequences", seqs)

    @property
    def lengths(self) -> tuple:
        return tuple(s.shape[0] for s in self.sequences)

    @property
    def m(self) -> int:
        """Reference (longest) length."""
        return self.sequences[0].shape[0] if self.sequences else 0

    def as_array(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.m
        arr = np.zeros((len(self.sequences), max(m, 1)), dtype=np.int64)
        for h, s in enumerate(self.sequences):
            arr[h, : s.shape[0]] = s
        return arr, np.array(self.lengths, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class ConnectionPoly:
    """Connection polynomial ``lam`` (``lam[0] == 1``) of a length-``t`` register."""

    lam: np.ndarray
    t: int
    ops: int = 0

    def __post_init__(self):
        lam = np.trim_zeros(np.asarray(self.lam, dtype=np.int64), "b")
        if lam.shape[0] == 0 or lam[0] != 1:
            raise ValueError("connection polynomial must have constant term 1")
        if lam.shape[0] - 1 > self.t:
            raise ValueError(f"degree {lam.shape[0] - 1} exceeds register length {self.t}")
        object.__setattr__(self, "lam", lam)

    @property
    def degree(self) -> int:
        return self.lam.shape[0] - 1

    def coeff(self, i: int) -> int:
        return int(self.lam[i]) if i < self.lam.shape[0] else 0

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length, dtype=np.int64)
        out[: self.lam.shape[0]] = self.lam
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ConnectionPoly)
            and self.t == other.t
            and np.array_equal(self.lam, other.lam)
        )


def synthesize(field: FieldSpec, bundle: SequenceBundle) -> ConnectionPoly:
    """Shortest register ``(t, Lambda)`` generating every sequence in ``bundle``."""
    if not isinstance(bundle, SequenceBundle):
        bundle = SequenceBundle(bundle)
    if not bundle.sequences:
        return ConnectionPoly(np.ones(1, dtype=np.int64), 0)
    arr, lengths = bundle.as_array()
    t, lam, ops = _kernels.synthesize_kernel(arr, lengths, field.exp, field.log, field.q - 1)
    return ConnectionPoly(lam, int(t), int(ops))


def satisfies_recursions(field: FieldSpec, bundle, t: int, lam) -> bool:
    """True iff every sequence obeys the length-``t`` recursion with ``lam``."""
    if not isinstance(bundle, SequenceBundle):
        bundle = SequenceBundle(bundle)
    coeffs = np.asarray(lam.lam if isinstance(lam, ConnectionPoly) else lam, dtype=np.int64)
    if coeffs.shape[0] == 0 or coeffs[0] != 1:
        raise ValueError("connection polynomial must have constant term 1")
    if np.any(coeffs[t + 1 :]):
        return False
    taps = np.zeros(t + 1, dtype=np.int64)
    taps[: min(t + 1, coeffs.shape[0])] = coeffs[: t + 1]
    for s in bundle.sequences:
        for j in range(t, s.shape[0]):
            acc = int(s[j])
            for i in range(1, t + 1):
                acc ^= field.mul(int(taps[i]), int(s[j - i]))
            if acc:
                return False
    return True
