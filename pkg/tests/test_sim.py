import numpy as np
import pytest

from rsbeyond.rs_codec import RsCode, syndromes
from rsbeyond.shiftreg import synthesize
from rsbeyond.sim import (
    BLOCK_SIZE,
    _fixed_weight_noise,
    QscConfig,
    TrialReport,
    block_rng,
    fixed_weight_error,
    mc_fixed_weight,
    mc_qsc,
    qsc_corrupt,
    report_row,
    wilson_interval,
)

RS7 = RsCode.from_params(3, 7, 2)
RS31_6 = RsCode.from_params(5, 31, 6)


def test_qsc_extremes():
    rng = np.random.default_rng(0)
    word = rng.integers(0, 32, 1000)
    assert np.array_equal(qsc_corrupt(word, 0.0, rng, 32), word)
    flipped = qsc_corrupt(word, 1.0, rng, 32)
    assert np.all(flipped != word)
    assert np.all((flipped >= 0) & (flipped < 32))


def test_qsc_flip_rate_and_uniform_replacement():
    rng = block_rng(1, 0)
    word = np.zeros(10**6, dtype=np.int64)
    y = qsc_corrupt(word, 0.3, rng, 8)
    assert abs(np.count_nonzero(y) / y.size - 0.3) < 0.002
    counts = np.bincount(y[y != 0], minlength=8)[1:]
    expected = np.count_nonzero(y) / 7
    assert np.all(np.abs(counts - expected) < 5 * np.sqrt(expected))


def test_qsc_config_validates():
    QscConfig(0.5, 3)
    with pytest.raises(ValueError):
        QscConfig(1.2)


def test_fixed_weight_error():
    rng = np.random.default_rng(2)
    assert not np.any(fixed_weight_error(31, 0, rng, 32))
    for t in range(32):
        e = fixed_weight_error(31, t, rng, 32)
        assert np.count_nonzero(e) == t
        assert e.max(initial=0) < 32
    with pytest.raises(ValueError):
        fixed_weight_error(31, 32, rng, 32)


def test_fixed_weight_support_is_uniform():
    rng = block_rng(3, 0)
    draws = 10**5
    hits = np.zeros(31)
    for _ in range(draws // 1000):
        hits += np.count_nonzero(_fixed_weight_noise(rng, 1000, 31, 3, 32), axis=0)
    p = 3 / 31
    sigma = np.sqrt(p * (1 - p) / draws)
    assert np.all(np.abs(hits / draws - p) < 3.5 * sigma)


def test_wilson_interval():
    lo, hi = wilson_interval(0, 100)
    assert lo == 0 and 0 < hi < 0.04
    lo, hi = wilson_interval(50, 100)
    assert lo < 0.5 < hi
    # textbook value for 3/10 at 95%
    assert wilson_interval(3, 10) == pytest.approx((0.1078, 0.6032), abs=1e-4)
    assert wilson_interval(0, 0) == (0.0, 1.0)


def test_report_invariants():
    with pytest.raises(ValueError):
        TrialReport("c", "bmd", 1, 10, 5, 1, 1, 0)
    r = TrialReport("c", "bmd", 1, 10, 7, 1, 2, 0)
    assert (r.rate_c, r.rate_e, r.rate_f, r.rate_w) == (0.7, 0.1, 0.2, pytest.approx(0.3))
    assert r.counts() == (7, 1, 2)


@pytest.mark.parametrize("decoder", ["extended", "bmd"])
def test_inside_radius_never_fails(decoder):
    for t in range(RS31_6.tau + 1):
        r = mc_fixed_weight(RS31_6, decoder, t, 10**4 if t == RS31_6.tau else 2000, master_seed=t)
        assert r.n_failure == 0 and r.n_error == 0


def test_noiseless_channel():
    r = mc_qsc(RS31_6, "extended", 0.0, 3000, master_seed=1)
    assert r.rate_w == 0


def test_unknown_decoder():
    with pytest.raises(ValueError):
        mc_qsc(RS31_6, "list", 0.1, 10, master_seed=1)
    with pytest.raises(ValueError):
        mc_fixed_weight(RS31_6, "bmd", 40, 10, master_seed=1)


def test_counts_independent_of_worker_count():
    N = 3 * BLOCK_SIZE + 17
    reports = [mc_fixed_weight(RS31_6, "extended", 15, N, master_seed=42, workers=w) for w in (1, 4, 16)]
    assert len({r.counts() for r in reports}) == 1
    assert reports[0].n_failure > 0
    q = [mc_qsc(RS31_6, "bmd", 0.3, N, master_seed=9, workers=w) for w in (1, 4, 16)]
    assert len({r.counts() for r in q}) == 1


def test_prefix_of_a_longer_run():
    # blocks are seeded by index, so a longer run extends a shorter one
    short = mc_fixed_weight(RS31_6, "extended", 15, 2 * BLOCK_SIZE, master_seed=7)
    long = mc_fixed_weight(RS31_6, "extended", 15, 4 * BLOCK_SIZE, master_seed=7)
    first = mc_fixed_weight(RS31_6, "extended", 15, BLOCK_SIZE, master_seed=7)
    assert first.n_failure <= short.n_failure <= long.n_failure


def test_seed_changes_outcome():
    a = mc_fixed_weight(RS31_6, "extended", 15, 20_000, master_seed=1)
    b = mc_fixed_weight(RS31_6, "extended", 15, 20_000, master_seed=2)
    assert a.counts() != b.counts()


def test_rows_are_stable():
    a = report_row(mc_qsc(RS31_6, "extended", 0.3, 5000, master_seed=3))
    b = report_row(mc_qsc(RS31_6, "extended", 0.3, 5000, master_seed=3))
    assert a == b
    assert a[0] == "RS(2^5; 31, 6)" and a[-1] == "3"


def test_zero_codeword_variant():
    a = mc_fixed_weight(RS31_6, "extended", 15, 5000, master_seed=4, zero_codeword=True)
    b = mc_fixed_weight(RS31_6, "extended", 15, 5000, master_seed=4)
    assert a.N == b.N == 5000
    assert abs(a.rate_f - b.rate_f) < 0.03


def test_literal_syndrome_has_linear_complexity_t():
    rng = block_rng(5, 0)
    f = RS7.field
    for _ in range(1000):
        t = int(rng.integers(0, 6))
        e = fixed_weight_error(7, t, rng, 8)
        s1 = syndromes(RS7, e, 1).sequences[0]
        found = synthesize(f, [s1]).t
        if 2 * t <= RS7.n - RS7.k:
            assert found == t
        else:
            assert found <= t
