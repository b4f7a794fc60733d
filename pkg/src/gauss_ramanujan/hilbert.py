"""Hilbert transforms of the Gaussian pulse and GR_I via Dawson's function."""
from __future__ import annotations

import math

import numpy as np

from . import numerics
from .gauram import gp, order_one
from .specfun import dawson

__all__ = [
    "hilbert_gp",
    "hilbert_gr1",
    "analytic_signal",
    "analytic_signal_gp",
    "ht_orthogonality_defect",
    "gp_orthogonality_defect",
]

_SQRT_PI = math.sqrt(math.pi)

# Hilbert transforms decay only algebraically; give quadrature room to
# push the truncation far out.
_HT_SETTINGS = numerics.QuadratureSettings(abs_tol=1e-11, max_subdivisions=400)


def _out(x):
    return x if np.ndim(x) else x.item()


def hilbert_gp(t):
    """(2/sqrt(pi)) D+(sqrt(pi) t), the Hilbert transform of exp(-pi t^2)."""
    t = np.asarray(t, dtype=float)
    return _out(2.0 / _SQRT_PI * dawson(_SQRT_PI * t))


def hilbert_gr1(t, T0: float):
    """sqrt(2/pi) [D+(sqrt(pi) t) - D+(sqrt(pi)(t - T0))]."""
    t = np.asarray(t, dtype=float)
    return _out(math.sqrt(2.0 / math.pi) * (dawson(_SQRT_PI * t) - dawson(_SQRT_PI * (t - T0))))


def analytic_signal(t, T0: float):
    """GR_I(t; T0) + j * its Hilbert transform."""
    return _out(np.asarray(order_one(T0)(t)) + 1j * np.asarray(hilbert_gr1(t, T0)))


def analytic_signal_gp(t):
    return _out(np.asarray(gp(t)) + 1j * np.asarray(hilbert_gp(t)))


def ht_orthogonality_defect(T0: float,
                            settings: numerics.QuadratureSettings = _HT_SETTINGS) -> float:
    """Quadrature value of <GR_I, H{GR_I}>; zero for any finite-energy pulse."""
    if not T0 > 0:
        raise ValueError("T0 must be positive")
    pulse = order_one(T0)
    return numerics.integrate(lambda t: pulse(t) * hilbert_gr1(t, T0), -math.inf, math.inf,
                              settings, center=T0 / 2.0)


def gp_orthogonality_defect(settings: numerics.QuadratureSettings = _HT_SETTINGS) -> float:
    return numerics.integrate(lambda t: gp(t) * hilbert_gp(t), -math.inf, math.inf, settings)
