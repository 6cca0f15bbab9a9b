"""Arithmetic in GF(2^m) via log/antilog tables.

Elements are plain ints in ``[0, q)``; bit ``i`` is the coefficient of
``x^i`` in the polynomial basis.  The tables are exposed as numpy arrays
so that the jitted kernels elsewhere in the package can share them.
"""

from __future__ import annotations

import math

import numpy as np

# Standard primitive polynomials, bit-encoded (bit i <-> x^i).
DEFAULT_PRIM_POLYS = {
    2: 0x7,  # x^2+x+1
    3: 0xB,  # x^3+x+1
    4: 0x13,  # x^4+x+1
    5: 0x25,  # x^5+x^2+1
    6: 0x43,  # x^6+x+1
    7: 0x89,  # x^7+x^3+1
    8: 0x11D,  # x^8+x^4+x^3+x^2+1
    9: 0x211,  # x^9+x^4+1
    10: 0x409,  # x^10+x^3+1
    11: 0x805,  # x^11+x^2+1
    12: 0x1053,  # x^12+x^6+x^4+x+1
    13: 0x201B,  # x^13+x^4+x^3+x+1
    14: 0x4443,  # x^14+x^10+x^6+x+1
    15: 0x8003,  # x^15+x+1
    16: 0x1100B,  # x^16+x^12+x^3+x+1
}


class FieldError(ValueError):
    """Invalid field construction or an undefined field operation."""


class FieldSpec:
    """The field GF(2^m) defined by a primitive polynomial.

    ``log[0]`` is the sentinel ``ZERO_LOG = 2*(q-1)`` and ``exp`` is padded
    with zeros past ``2*(q-1)``, so ``exp[log[a] + log[b]]`` is the product
    for every pair of elements, zero included, without branching.
    """

    def __init__(self, m: int, prim_poly: int | None = None):
        if not 2 <= m <= 16:
            raise FieldError(f"extension degree must be in [2, 16], got {m}")
        if prim_poly is None:
            prim_poly = DEFAULT_PRIM_POLYS[m]
        if prim_poly >> m != 1:
            raise FieldError(f"polynomial {prim_poly:#x} does not have degree {m}")
        self.m = m
        self.prim_poly = prim_poly
        self.q = 1 << m
        q1 = self.q - 1

        zero_log = 2 * q1
        exp = np.zeros(4 * q1 + 1, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        a = 1
        for i in range(q1):
            if log[a] != -1:
                # x returned to an earlier power before visiting all q-1 elements
                raise FieldError(
                    f"polynomial {prim_poly:#x} is not primitive over GF(2) (order of x is {i})"
                )
            exp[i] = a
            log[a] = i
            a <<= 1
            if a & self.q:
                a ^= prim_poly
        if a != 1:
            raise FieldError(f"polynomial {prim_poly:#x} is not primitive over GF(2)")
        exp[q1:zero_log] = exp[:q1]
        log[0] = zero_log
        self.zero_log = zero_log
        exp.flags.writeable = False
        log.flags.writeable = False
        self.exp = exp
        self.log = log

    def __repr__(self):
        return f"FieldSpec(m={self.m}, prim_poly={self.prim_poly:#x})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.m, self.prim_poly) == (other.m, other.prim_poly)

    def __hash__(self):
        return hash((self.m, self.prim_poly))

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of GF({self.q})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return int(a) ^ int(b)

    sub = add

    def mul(self, a: int, b: int) -> int:
        a, b = self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        a = self._check(a)
        if a == 0:
            raise FieldError("0 has no multiplicative inverse")
        return int(self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a**e``; negative ``e`` is allowed for nonzero ``a``."""
        a = self._check(a)
        if a == 0:
            if e < 0:
                raise FieldError("0 cannot be raised to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        a = self._check(a)
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        q1 = self.q - 1
        la = int(self.log[a])
        return q1 // math.gcd(la, q1)

    def root_of_unity(self, n: int) -> int:
        """Element of order exactly ``n``: ``x^((q-1)/n)``."""
        q1 = self.q - 1
        if n < 1 or q1 % n:
            raise FieldError(f"no element of order {n} in GF({self.q}): {n} does not divide {q1}")
        return int(self.exp[q1 // n])

    def scalar(self, n: int) -> int:
        """The field element ``1 + 1 + ... + 1`` (``n`` terms)."""
        return n & 1

    def elements(self) -> range:
        return range(self.q)
