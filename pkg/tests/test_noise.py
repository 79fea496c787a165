import numpy as np
import pytest

from compact_ga import NoiseSpec, RandomSource, noisy_eval, one_max


def test_negative_variance_rejected():
    with pytest.raises(ValueError):
        NoiseSpec(-1.0)


def test_zero_variance_is_exact():
    x = np.array([1, 1, 1, 1], np.int8)
    assert noisy_eval(one_max, x, NoiseSpec(0.0), RandomSource(1)) == 4.0


def test_zero_variance_consumes_no_draw():
    x = np.array([1, 0, 1], np.int8)
    rs = RandomSource(3)
    noisy_eval(one_max, x, NoiseSpec(0.0), rs)
    assert rs.generator.random() == RandomSource(3).generator.random()


def test_fresh_draws_differ():
    x = np.array([1] * 10, np.int8)
    rs = RandomSource(5)
    spec = NoiseSpec(100.0)
    a = noisy_eval(one_max, x, spec, rs)
    b = noisy_eval(one_max, x, spec, rs)
    assert a != b


def test_same_seed_same_noise_sequence():
    x = np.array([1, 0] * 5, np.int8)
    spec = NoiseSpec(25.0)
    ra, rb = RandomSource(17), RandomSource(17)
    for _ in range(20):
        assert noisy_eval(one_max, x, spec, ra) == noisy_eval(one_max, x, spec, rb)


def test_moments_sigma2_100():
    # sample mean within f(x) +- 0.15 and sample variance within 100 +- 3
    # over 1e5 evaluations (3-sigma-plus bands)
    x = np.array([1] * 50 + [0] * 50, np.int8)
    spec = NoiseSpec(100.0)
    rs = RandomSource(2024)
    reps = 100_000
    vals = np.array([noisy_eval(one_max, x, spec, rs) for _ in range(reps)])
    assert abs(vals.mean() - 50.0) < 0.15
    assert abs(vals.var(ddof=1) - 100.0) < 3.0
    # perceived minus true fitness is centered with variance sigma^2
    diffs = vals - 50.0
    assert abs(diffs.mean()) < 0.15
    assert abs(diffs.var(ddof=1) - spec.variance) < 3.0
