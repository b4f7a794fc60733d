"""Gauss-Ramanujan mother wavelet and the first-order Hermite benchmark.

Time-frequency spreads follow

    dt^2 = int t^2 |psi(t)|^2 dt
    dw^2 = int w^2 |Psi(w)|^2 dw / 2pi  (= int |psi'(t)|^2 dt)

where the second moment in frequency is evaluated through the derivative
identity; :func:`delta_omega_frequency_domain` integrates the analytic
spectrum directly as a cross-check.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import numerics

__all__ = [
    "REFERENCE_CONTAINMENT",
    "WaveletMetrics",
    "normalization_constant",
    "psi_gr",
    "psi_gr_derivative",
    "psi_gr_spectrum",
    "psi_hermite",
    "psi_hermite_derivative",
    "psi_hermite_spectrum",
    "autocorr_hermite",
    "autocorr_gr",
    "autocorr_quadrature",
    "decay_lag",
    "tf_metrics",
    "delta_omega_frequency_domain",
    "containment_comparison",
]

# Published time-frequency containment figures at T0 = 1 (reproduction targets).
REFERENCE_CONTAINMENT = {
    "hermite": {"delta_t": math.sqrt(1.5), "delta_omega": math.sqrt(0.5), "product": 0.866},
    "gauram": {"delta_t": 0.720, "delta_omega": 1.055, "product": 0.760},
}

_HERMITE_AMP = math.sqrt(2.0) * math.pi ** -0.25
_SETTINGS = numerics.QuadratureSettings(abs_tol=1e-12, max_subdivisions=200)


def _out(x):
    return x if np.ndim(x) else x.item()


def normalization_constant(T0: float) -> float:
    """B = 1 / sqrt(sqrt2 (1 - exp(-pi T0^2 / 2)))."""
    if not T0 > 0:
        raise ValueError("T0 must be positive")
    return 1.0 / math.sqrt(math.sqrt(2.0) * -math.expm1(-math.pi * T0 * T0 / 2.0))


def psi_gr(t, T0: float):
    t = np.asarray(t, dtype=float)
    B = normalization_constant(T0)
    return _out(B * (np.exp(-np.pi * t * t) - np.exp(-np.pi * (t - T0) ** 2)))


def psi_gr_derivative(t, T0: float):
    t = np.asarray(t, dtype=float)
    B = normalization_constant(T0)
    return _out(-2.0 * np.pi * B * (t * np.exp(-np.pi * t * t)
                                    - (t - T0) * np.exp(-np.pi * (t - T0) ** 2)))


def psi_gr_spectrum(f, T0: float):
    """B exp(-pi f^2) (1 - exp(-2j pi f T0))."""
    f = np.asarray(f, dtype=float)
    return _out(normalization_constant(T0) * np.exp(-np.pi * f * f)
                * (1.0 - np.exp(-2j * np.pi * f * T0)))


def psi_hermite(t):
    """sqrt2 pi^(-1/4) t exp(-t^2 / 2)."""
    t = np.asarray(t, dtype=float)
    return _out(_HERMITE_AMP * t * np.exp(-t * t / 2.0))


def psi_hermite_derivative(t):
    t = np.asarray(t, dtype=float)
    return _out(_HERMITE_AMP * (1.0 - t * t) * np.exp(-t * t / 2.0))


def psi_hermite_spectrum(f):
    f = np.asarray(f, dtype=float)
    return _out(-2j * np.pi * math.sqrt(2.0 * np.pi) * _HERMITE_AMP * f
                * np.exp(-2.0 * np.pi**2 * f * f))


def autocorr_hermite(tau):
    """(1 - tau^2/2) exp(-tau^2/4)."""
    tau = np.asarray(tau, dtype=float)
    return _out((1.0 - tau * tau / 2.0) * np.exp(-tau * tau / 4.0))


def autocorr_gr(tau, T0: float):
    if not T0 > 0:
        raise ValueError("T0 must be positive")
    tau = np.asarray(tau, dtype=float)
    num = (2.0 * np.exp(-np.pi / 2.0 * tau * tau)
           - np.exp(-np.pi / 2.0 * (tau - T0) ** 2)
           - np.exp(-np.pi / 2.0 * (tau + T0) ** 2))
    return _out(num / (-2.0 * math.expm1(-np.pi * T0 * T0 / 2.0)))


def autocorr_quadrature(psi: Callable, tau: float, *, center: float = 0.0,
                        settings: numerics.QuadratureSettings = _SETTINGS) -> float:
    """int psi(t) psi(t + tau) dt by quadrature."""
    return numerics.integrate(lambda t: psi(t) * psi(t + tau), -math.inf, math.inf,
                              settings, center=center - tau / 2.0, width=1.5)


def decay_lag(autocorr: Callable, threshold: float = 0.01, tau_max: float = 20.0,
              n_points: int = 200001) -> float:
    """Smallest lag beyond which |R(tau)| stays below ``threshold`` (tau >= 0)."""
    tau = np.linspace(0.0, tau_max, n_points)
    above = np.nonzero(np.abs(autocorr(tau)) >= threshold)[0]
    return float(tau[above[-1]]) if above.size else 0.0


@dataclass(frozen=True)
class WaveletMetrics:
    delta_t: float
    delta_t_centered: float
    delta_omega: float
    product: float
    energy: float
    mean_value: float
    time_center: float

    def as_dict(self) -> dict:
        return asdict(self)


def _wavelet(kind: str, T0: float | None):
    if kind == "hermite":
        return psi_hermite, psi_hermite_derivative, 0.0
    if kind == "gauram":
        if T0 is None:
            raise ValueError("gauram wavelet needs T0")
        return (lambda t: psi_gr(t, T0)), (lambda t: psi_gr_derivative(t, T0)), T0 / 2.0
    raise ValueError(f"unknown wavelet {kind!r}")


def tf_metrics(kind: str, T0: float | None = None,
               settings: numerics.QuadratureSettings = _SETTINGS) -> WaveletMetrics:
    """Spreads, energy and mean of ``"hermite"`` or ``"gauram"`` (with ``T0``)."""
    psi, dpsi, center = _wavelet(kind, T0)

    def moment(fn):
        return numerics.integrate(fn, -math.inf, math.inf, settings, center=center, width=1.5)

    energy = moment(lambda t: psi(t) ** 2)
    mean_value = moment(psi)
    first = moment(lambda t: t * psi(t) ** 2)
    second = moment(lambda t: t * t * psi(t) ** 2)
    dw2 = moment(lambda t: dpsi(t) ** 2)
    delta_t = math.sqrt(second)
    delta_omega = math.sqrt(dw2)
    return WaveletMetrics(
        delta_t=delta_t,
        delta_t_centered=math.sqrt(second - first * first / energy),
        delta_omega=delta_omega,
        product=delta_t * delta_omega,
        energy=energy,
        mean_value=mean_value,
        time_center=first / energy,
    )


def delta_omega_frequency_domain(kind: str, T0: float | None = None,
                                 settings: numerics.QuadratureSettings = _SETTINGS) -> float:
    """sqrt of int (2 pi f)^2 |Psi(f)|^2 df from the analytic spectrum."""
    if kind == "hermite":
        spec = psi_hermite_spectrum
    elif kind == "gauram":
        if T0 is None:
            raise ValueError("gauram wavelet needs T0")
        spec = lambda f: psi_gr_spectrum(f, T0)  # noqa: E731
    else:
        raise ValueError(f"unknown wavelet {kind!r}")
    val = numerics.integrate(lambda f: (2.0 * np.pi * f) ** 2 * np.abs(spec(f)) ** 2,
                             -math.inf, math.inf, settings)
    return math.sqrt(val)


def containment_comparison(T0: float = 1.0) -> dict:
    """Computed spreads for both wavelets next to the reference table."""
    out = {}
    for kind, metrics in (("hermite", tf_metrics("hermite")), ("gauram", tf_metrics("gauram", T0))):
        ref = REFERENCE_CONTAINMENT[kind]
        computed = {"delta_t": metrics.delta_t, "delta_omega": metrics.delta_omega,
                    "product": metrics.product}
        out[kind] = {
            "metrics": metrics.as_dict(),
            "table1_target": dict(ref),
            "deviation_percent": {k: 100.0 * (computed[k] - ref[k]) / ref[k] for k in ref},
        }
    out["T0"] = T0
    return out
