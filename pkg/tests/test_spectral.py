import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gauss_ramanujan import gauram, spectral


def _dft(x, f, t):
    return (np.exp(-2j * np.pi * np.outer(f, t)) @ x) * (t[1] - t[0])


def test_gaussian_is_self_transform():
    t = np.linspace(-8, 8, 8001)
    f = np.linspace(-2, 2, 41)
    assert np.allclose(_dft(gauram.gp(t), f, t), spectral.gaussian_spectrum(f), atol=1e-12)


def test_gr1_spectrum_matches_transform():
    T0 = 1.8
    t = np.linspace(-10, 12, 22001)
    f = np.linspace(-3, 3, 61)
    assert np.allclose(_dft(gauram.order_one(T0)(t), f, t), spectral.gr1_spectrum(f, T0), atol=1e-11)


def test_gr1_magnitude_frozen():
    assert spectral.gr1_magnitude(0.2, 1.8) == pytest.approx(1.128510281888052, rel=1e-14)


@given(st.floats(-4, 4), st.floats(0.2, 3))
def test_magnitude_identity(f, T0):
    assert abs(spectral.gr1_spectrum(f, T0)) == pytest.approx(spectral.gr1_magnitude(f, T0), abs=1e-13)


@given(st.integers(-6, 6), st.floats(0.3, 3))
def test_nulls(m, T0):
    assert abs(spectral.gr1_spectrum(m / T0, T0)) < 1e-13


def test_phase_and_group_delay():
    T0 = 1.8
    assert spectral.gr1_phase(0.1, T0) == pytest.approx(math.pi / 2 - math.pi * 0.1 * T0, abs=1e-14)
    assert spectral.group_delay(T0) == 0.9
    with pytest.raises(ValueError):
        spectral.gr1_phase(1 / T0, T0)


def test_rho_and_pulses():
    assert spectral.rho_from_bt(0.3) == pytest.approx(0.8833678783979896, rel=1e-14)
    with pytest.raises(ValueError):
        spectral.rho_from_bt(0.0)
    rho = 0.7
    f = np.linspace(-2, 2, 21)
    t = np.linspace(-8, 8, 16001)
    assert np.allclose(_dft(spectral.gmsk_pulse(t, rho), f, t),
                       spectral.pulse_spectrum_analytic("gmsk", f, rho=rho), atol=1e-11)
    assert np.allclose(_dft(spectral.grsk_pulse(t, rho, 2.45), f, t),
                       spectral.pulse_spectrum_analytic("grsk", f, eta=rho, T0=2.45), atol=1e-11)


def test_psd_normalisation_and_floor():
    pts = spectral.spectrum_points([0.0, 0.5, 1.0], [2.0, 1.0, 0.0])
    psd = [p.psd_db for p in spectral.normalized_psd(pts)]
    assert psd[0] == 0.0
    assert psd[1] == pytest.approx(-20 * math.log10(2), abs=1e-12)
    assert psd[2] == spectral.PSD_FLOOR_DB
    with pytest.raises(ValueError):
        spectral.normalized_psd(spectral.spectrum_points([0.0], [0.0]))


@given(st.lists(st.floats(1e-3, 1e3), min_size=1, max_size=20))
def test_psd_peak_is_zero_db(mags):
    db = spectral.psd_db(np.array(mags))
    assert np.max(db) == pytest.approx(0.0, abs=1e-12)
    assert np.all(db <= 1e-12)


def test_null_frequencies():
    assert spectral.null_frequencies(2.45, 1.0) == pytest.approx([1 / 2.45, 2 / 2.45])
    assert spectral.null_frequencies(2.45, 0.1) == []
