import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gauss_ramanujan.numerics import (Grid, QuadratureError, QuadratureSettings, integrate,
                                      inner_product, splitmix64, uniform_random)


def _splitmix_reference(seed, n):
    mask = 2**64 - 1
    state, out = seed & mask, []
    for _ in range(n):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


def test_splitmix_known_outputs():
    assert splitmix64(1, 3).tolist() == [10451216379200822465, 13757245211066428519,
                                         17911839290282890590]


@given(st.integers(0, 2**64 - 1), st.integers(1, 40))
def test_splitmix_matches_scalar_reference(seed, n):
    assert splitmix64(seed, n).tolist() == _splitmix_reference(seed, n)


def test_splitmix_prefix_stable():
    assert np.array_equal(splitmix64(7, 1000)[:10], splitmix64(7, 10))


@given(st.integers(0, 2**32), st.floats(-5, 5), st.floats(0.01, 5))
def test_uniform_random_in_range(seed, lo, width):
    u = uniform_random(seed, lo, lo + width, 256)
    assert np.all(u >= lo) and np.all(u < lo + width)


def test_uniform_random_moments():
    u = uniform_random(42, 0.0, 1.0, 200_000)
    assert abs(u.mean() - 0.5) < 5e-3
    assert abs(u.var() - 1 / 12) < 5e-3


def test_uniform_random_rejects_bad_args():
    with pytest.raises(ValueError):
        uniform_random(1, 1.0, 1.0, 4)
    with pytest.raises(ValueError):
        uniform_random(1, 0.0, 1.0, 0)


def test_grid_parse_and_samples():
    g = Grid.parse("-1:1:5")
    assert g.step == 0.5
    assert g.samples().tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]
    for bad in ("1:0:5", "0:1:1", "0:1", "a:b:c"):
        with pytest.raises(ValueError):
            Grid.parse(bad)


def test_settings_validation():
    with pytest.raises(ValueError):
        QuadratureSettings(abs_tol=0)
    with pytest.raises(ValueError):
        QuadratureSettings(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSettings(infinite_tail_cutoff=-1)


@pytest.mark.parametrize("a, b, expected", [
    (0.0, 1.0, math.erf(math.sqrt(math.pi)) / 2),
    (-math.inf, math.inf, 1.0),
    (0.0, math.inf, 0.5),
    (-math.inf, 0.3, 0.5 + math.erf(math.sqrt(math.pi) * 0.3) / 2),
])
def test_gaussian_integrals(a, b, expected):
    assert integrate(lambda t: np.exp(-np.pi * t * t), a, b) == pytest.approx(expected, abs=1e-12)


def test_reversed_limits_negate():
    f = lambda t: np.cos(t)  # noqa: E731
    assert integrate(f, 1.0, 0.0) == pytest.approx(-math.sin(1.0), abs=1e-13)
    assert integrate(f, 2.0, 2.0) == 0.0


def test_offcentre_envelope_needs_center():
    f = lambda t: np.exp(-np.pi * (t - 50.0) ** 2)  # noqa: E731
    assert integrate(f, -math.inf, math.inf, center=50.0) == pytest.approx(1.0, abs=1e-12)


def test_narrow_pulse_on_wide_interval():
    # a single wide panel would sample only tails here
    f = lambda t: np.exp(-np.pi * (t / 0.05) ** 2)  # noqa: E731
    assert integrate(f, -40.0, 40.0, width=0.05) == pytest.approx(0.05, abs=1e-12)


def test_non_convergence_raises_with_estimate():
    tight = QuadratureSettings(abs_tol=1e-15, max_subdivisions=1)
    with pytest.raises(QuadratureError) as info:
        integrate(lambda t: np.abs(np.sin(40 * t)) ** 0.5, 0.0, 10.0, tight)
    assert math.isfinite(info.value.estimate)


def test_non_finite_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda t: 1.0 / t, -1.0, 1.0)


@settings(max_examples=30)
@given(st.floats(-3, 3), st.floats(0.2, 3))
def test_inner_product_of_shifted_gaussians(c, d):
    # <g(t - c), g(t - c - d)> = exp(-pi d^2 / 2) / sqrt2
    got = inner_product(lambda t: np.exp(-np.pi * (t - c) ** 2),
                        lambda t: np.exp(-np.pi * (t - c - d) ** 2), center=c + d / 2)
    assert got == pytest.approx(math.exp(-math.pi * d * d / 2) / math.sqrt(2), abs=1e-11)
