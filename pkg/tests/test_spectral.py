import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import SlowField, exhaustive_min_length, horner, min_register_length
from rsbeyond.gf_field import FieldError, FieldSpec
from rsbeyond.spectral import NEG_INF, as_poly, degree, dft, idft, weight

FIELDS = {m: FieldSpec(m) for m in (3, 4, 5, 8)}


def _slow(f):
    return SlowField(f.m, f.prim_poly)


@pytest.mark.parametrize("m", [3, 4, 5, 8])
def test_round_trip_thousand_words(m):
    f = FIELDS[m]
    n = f.q - 1
    a = f.root_of_unity(n)
    rng = np.random.default_rng(m)
    for _ in range(1000):
        p = rng.integers(0, f.q, n)
        assert np.array_equal(idft(f, dft(f, p, a, n), a, n), p)
        assert np.array_equal(dft(f, idft(f, p, a, n), a, n), p)


@pytest.mark.parametrize("m,n", [(4, 5), (4, 3), (8, 51), (8, 17), (6, 21)])
def test_round_trip_proper_divisors(m, n):
    f = FieldSpec(m)
    a = f.root_of_unity(n)
    rng = np.random.default_rng(n)
    for _ in range(50):
        p = rng.integers(0, f.q, n)
        assert np.array_equal(idft(f, dft(f, p, a, n), a, n), p)


@pytest.mark.parametrize("m", [3, 5])
def test_dft_is_evaluation(m):
    f = FIELDS[m]
    slow = _slow(f)
    n = f.q - 1
    a = f.root_of_unity(n)
    rng = np.random.default_rng(7)
    for _ in range(20):
        p = rng.integers(0, f.q, n)
        P = dft(f, p, a, n)
        assert [int(v) for v in P] == [horner(slow, p, slow.pow(a, i)) for i in range(n)]


def test_trivial_transforms():
    f = FIELDS[3]
    a = f.root_of_unity(7)
    assert not np.any(dft(f, np.zeros(7, dtype=int), a, 7))
    assert not np.any(idft(f, np.zeros(7, dtype=int), a, 7))
    assert np.all(dft(f, [5], a, 7) == 5)
    assert dft(f, [0, 1], a, 7).tolist() == [f.pow(a, i) for i in range(7)]
    assert f.inv(f.scalar(7)) == 1


def test_order_mismatch():
    f = FIELDS[4]
    with pytest.raises(FieldError):
        dft(f, [1, 2, 3], f.root_of_unity(5), 15)
    with pytest.raises(FieldError):
        idft(f, [1, 2, 3], 0, 15)


def test_too_long_input():
    f = FIELDS[3]
    with pytest.raises(ValueError):
        dft(f, [1] * 8, 2, 7)


def test_degree_and_weight():
    assert degree([0, 0, 0]) == NEG_INF
    assert degree([1, 0, 3, 0]) == 2
    assert degree([4]) == 0
    assert weight([0, 3, 0, 1]) == 2
    assert as_poly([1, 2], 4).tolist() == [1, 2, 0, 0]


def _cyclic_convolution(slow, A, B, n):
    out = [0] * n
    for i in range(n):
        for j in range(n):
            out[(i + j) % n] ^= slow.mul(int(A[i]), int(B[j]))
    return out


@pytest.mark.parametrize("m", [3, 4])
def test_convolution_theorem(m):
    # product in time <-> cyclic convolution of spectra, up to the n^-1 = 1 factor
    f = FIELDS[m]
    slow = _slow(f)
    n = f.q - 1
    alpha = f.root_of_unity(n)
    rng = np.random.default_rng(3)
    for _ in range(25):
        a, b = rng.integers(0, f.q, (2, n))
        prod = np.array([f.mul(int(x), int(y)) for x, y in zip(a, b)])
        lhs = dft(f, prod, alpha, n)
        rhs = _cyclic_convolution(slow, dft(f, a, alpha, n), dft(f, b, alpha, n), n)
        assert lhs.tolist() == rhs


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 2**32 - 1))
def test_spectrum_linear_complexity_equals_weight(t, seed):
    f = FIELDS[3]
    slow = _slow(f)
    n = 7
    rng = np.random.default_rng(seed)
    e = np.zeros(n, dtype=np.int64)
    e[rng.choice(n, t, replace=False)] = rng.integers(1, f.q, t)
    E = dft(f, e, f.root_of_unity(n), n)
    periodic = np.concatenate([E, E])
    assert min_register_length(slow, [periodic]) == t
    if t <= 2:
        assert exhaustive_min_length(slow, [periodic], 2) == t
