import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate as sci_integrate

from gauss_ramanujan import gauram
from gauss_ramanujan.gauram import (GauRamSpec, SIGMA, delay_for_overlap, mean_overlap_approx,
                                    mean_overlap_exact, mean_overlap_from_q_approx,
                                    mean_overlap_monte_carlo, overlap_closed_form, overlap_report)


def test_pulses():
    assert gauram.gp(0.0) == 1.0
    assert gauram.dgp(1.8, 1.8) == 1.0
    assert gauram.gp(1.0) == pytest.approx(math.exp(-math.pi), rel=1e-15)
    # unit area and self-transform
    assert sci_integrate.quad(gauram.gp, -np.inf, np.inf)[0] == pytest.approx(1.0, abs=1e-12)


def test_named_orders():
    t = np.linspace(-2, 6, 81)
    T0 = 1.3
    g = lambda d: np.exp(-np.pi * (t - d) ** 2)  # noqa: E731
    assert np.allclose(gauram.order_zero()(t), g(0), atol=1e-15)
    assert np.allclose(gauram.order_one(T0)(t), (g(0) - g(T0)) / math.sqrt(2), atol=1e-15)
    assert np.allclose(gauram.order_two(T0)(t), g(0) - 0.5 * g(T0) - 0.5 * g(2 * T0), atol=1e-15)
    assert np.allclose(gauram.order_three(T0)(t), (g(0) - g(2 * T0)) / math.sqrt(2), atol=1e-15)


def test_from_ramanujan_uses_unit_weights():
    spec = gauram.from_ramanujan(3, 1.0)
    assert spec.delays == (0.0, 1.0, 2.0)
    assert np.linalg.norm(spec.weights) == pytest.approx(1.0)
    assert gauram.from_ramanujan(2, 0.7)(0.35) == pytest.approx(0.0, abs=1e-16)


def test_spec_validation():
    with pytest.raises(ValueError):
        GauRamSpec((1.0,), (0.0, 1.0), 1.0)
    with pytest.raises(ValueError):
        GauRamSpec((1.0,), (0.0,), 0.0)
    with pytest.raises(ValueError):
        GauRamSpec((1.0,), (0.0,), 1.0, width_eta=0)


def test_amplitude_scaled_atoms_have_unit_area():
    spec = GauRamSpec((1.0,), (0.0,), 1.0, width_eta=0.6, amplitude_scaled=True)
    assert sci_integrate.quad(spec, -np.inf, np.inf)[0] == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_overlap_values():
    assert overlap_closed_form(0.0) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert overlap_closed_form(1.0) == pytest.approx(0.1469930581078104, rel=1e-14)
    assert overlap_closed_form(2.4) == pytest.approx(8.3e-5, rel=0.02)
    assert 6 * SIGMA == pytest.approx(2.3937, abs=1e-4)


@given(st.floats(0.0, 4.0))
def test_overlap_decreasing_and_bounded(T0):
    v = overlap_closed_form(T0)
    assert 0 < v <= 1 / math.sqrt(2)
    assert overlap_closed_form(T0 + 0.1) < v


@given(st.floats(0.05, 3.5))
def test_delay_round_trip(T0):
    assert delay_for_overlap(overlap_closed_form(T0)) == pytest.approx(T0, abs=1e-12)


def test_delay_for_overlap_value_and_domain():
    assert delay_for_overlap(0.01) == pytest.approx(1.6465438941507327, rel=1e-14)
    for eps in (0.0, 1 / math.sqrt(2), 1.0, -0.1):
        with pytest.raises(ValueError):
            delay_for_overlap(eps)


def test_mean_overlap_frozen():
    assert mean_overlap_exact(1.8, 0.09) == pytest.approx(0.004527762025390214, rel=1e-13)
    assert mean_overlap_approx(1.8, 0.09) == pytest.approx(0.0051409945331875135, rel=1e-13)


@settings(max_examples=40)
@given(st.floats(0.3, 3.0), st.floats(0.01, 0.3))
def test_mean_overlap_exact_is_average_of_overlap(T0, d):
    ref = sci_integrate.quad(overlap_closed_form, T0 - d, T0 + d, epsabs=1e-15)[0] / (2 * d)
    assert mean_overlap_exact(T0, d) == pytest.approx(ref, abs=1e-12)


@given(st.floats(0.5, 3.0), st.floats(0.01, 0.45))
def test_sinh_form_is_difference_of_q_approx(T0, d):
    assert mean_overlap_approx(T0, d) == pytest.approx(mean_overlap_from_q_approx(T0, d), rel=1e-11)


@given(st.floats(0.5, 3.0))
def test_small_offset_limit(T0):
    assert mean_overlap_exact(T0, 1e-5) == pytest.approx(overlap_closed_form(T0), rel=1e-8)


def test_offset_domain():
    for fn in (mean_overlap_exact, mean_overlap_approx):
        with pytest.raises(ValueError):
            fn(1.0, 0.0)
        with pytest.raises(ValueError):
            fn(1.0, -0.1)


def test_monte_carlo_reproducible_and_consistent():
    a = mean_overlap_monte_carlo(1.8, 0.09, seed=42, n=100_000)
    assert a == mean_overlap_monte_carlo(1.8, 0.09, seed=42, n=100_000)
    assert abs(a[0] - mean_overlap_exact(1.8, 0.09)) < 3 * a[1]


def test_report():
    rep = overlap_report(1.8, 0.09, 7, monte_carlo_samples=1000)
    assert rep.seed == 7 and rep.monte_carlo is not None
    assert rep.percent_error_approx_vs_exact == pytest.approx(13.54, abs=0.01)
    assert rep.oracle == pytest.approx(rep.exact, abs=1e-12)
    with pytest.raises(ValueError):
        overlap_report(1.8, 0.09, monte_carlo_samples=10)
