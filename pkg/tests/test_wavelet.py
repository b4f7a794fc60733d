import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate as sci_integrate

from gauss_ramanujan import wavelet


def quad(f):
    return sci_integrate.quad(f, -np.inf, np.inf, epsabs=1e-13, limit=400)[0]


def test_normalization_constant():
    assert wavelet.normalization_constant(1.0) == pytest.approx(0.944815252304437, rel=1e-14)
    with pytest.raises(ValueError):
        wavelet.normalization_constant(0.0)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.2, 4.0))
def test_admissibility_and_energy(T0):
    psi = lambda t: float(wavelet.psi_gr(t, T0))  # noqa: E731
    assert abs(quad(psi)) <= 1e-10
    assert quad(lambda t: psi(t) ** 2) == pytest.approx(1.0, abs=1e-10)


def test_hermite_energy():
    assert quad(lambda t: float(wavelet.psi_hermite(t)) ** 2) == pytest.approx(1.0, abs=1e-12)
    assert abs(quad(lambda t: float(wavelet.psi_hermite(t)))) < 1e-12


def test_derivatives_by_finite_difference():
    t = np.linspace(-3, 4, 71)
    h = 1e-6
    for psi, dpsi in ((wavelet.psi_hermite, wavelet.psi_hermite_derivative),
                      (lambda x: wavelet.psi_gr(x, 1.3), lambda x: wavelet.psi_gr_derivative(x, 1.3))):
        fd = (psi(t + h) - psi(t - h)) / (2 * h)
        assert np.allclose(dpsi(t), fd, atol=1e-8)


def test_spectra_match_transform():
    t = np.linspace(-10, 12, 22001)
    f = np.linspace(-2, 2, 41)
    kern = np.exp(-2j * np.pi * np.outer(f, t)) * (t[1] - t[0])
    assert np.allclose(kern @ wavelet.psi_hermite(t), wavelet.psi_hermite_spectrum(f), atol=1e-11)
    assert np.allclose(kern @ wavelet.psi_gr(t, 1.0), wavelet.psi_gr_spectrum(f, 1.0), atol=1e-11)


@pytest.mark.parametrize("tau", [-4.0, -1.3, 0.0, 0.7, 2.0, 4.0])
def test_autocorrelations(tau):
    assert wavelet.autocorr_hermite(tau) == pytest.approx(
        wavelet.autocorr_quadrature(wavelet.psi_hermite, tau), abs=1e-10)
    assert wavelet.autocorr_gr(tau, 1.0) == pytest.approx(
        wavelet.autocorr_quadrature(lambda t: wavelet.psi_gr(t, 1.0), tau, center=0.5), abs=1e-10)


@given(st.floats(-6, 6), st.floats(0.2, 3))
def test_autocorr_properties(tau, T0):
    assert wavelet.autocorr_gr(tau, T0) == pytest.approx(wavelet.autocorr_gr(-tau, T0), abs=1e-15)
    assert abs(wavelet.autocorr_gr(tau, T0)) <= 1 + 1e-12
    assert wavelet.autocorr_gr(0.0, T0) == pytest.approx(1.0, abs=1e-14)


def test_decay_lag():
    assert wavelet.decay_lag(wavelet.autocorr_hermite) == pytest.approx(5.3667, abs=1e-3)
    assert wavelet.decay_lag(lambda t: wavelet.autocorr_gr(t, 1.0)) == pytest.approx(2.6239, abs=1e-3)


def test_hermite_metrics():
    m = wavelet.tf_metrics("hermite")
    assert m.delta_t == pytest.approx(math.sqrt(1.5), abs=1e-10)
    assert m.delta_omega == pytest.approx(math.sqrt(1.5), abs=1e-10)
    assert m.product == pytest.approx(1.5, abs=1e-10)


def test_gauram_metrics_frozen():
    m = wavelet.tf_metrics("gauram", 1.0)
    assert m.delta_t == pytest.approx(0.8032347408439863, abs=1e-9)
    assert m.delta_t_centered == pytest.approx(0.6286382496306646, abs=1e-9)
    assert m.delta_omega == pytest.approx(2.3941001375777415, abs=1e-9)
    assert m.time_center == pytest.approx(0.5, abs=1e-12)
    assert m.as_dict()["product"] == pytest.approx(1.9230244035618091, abs=1e-9)


@settings(max_examples=10, deadline=None)
@given(st.floats(0.3, 3.0))
def test_delta_omega_two_ways_and_uncertainty(T0):
    m = wavelet.tf_metrics("gauram", T0)
    assert m.delta_omega == pytest.approx(wavelet.delta_omega_frequency_domain("gauram", T0), abs=1e-6)
    assert m.delta_t_centered * m.delta_omega >= 0.5


def test_containment_comparison_and_errors():
    comp = wavelet.containment_comparison(1.0)
    assert set(comp) == {"T0", "hermite", "gauram"}
    assert comp["hermite"]["deviation_percent"]["delta_t"] == pytest.approx(0.0, abs=1e-9)
    assert comp["gauram"]["table1_target"] == {"delta_t": 0.72, "delta_omega": 1.055, "product": 0.76}
    with pytest.raises(ValueError):
        wavelet.tf_metrics("morlet")
    with pytest.raises(ValueError):
        wavelet.tf_metrics("gauram")
