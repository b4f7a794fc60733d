"""Analytic spectra of the first-order GauRam pulse and the GMSK/GRSK pulses.

Fourier convention throughout: X(f) = int x(t) exp(-2j pi f t) dt, under
which exp(-pi t^2) is its own transform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

__all__ = [
    "PSD_FLOOR_DB",
    "SpectrumPoint",
    "gaussian_spectrum",
    "gr1_spectrum",
    "gr1_magnitude",
    "gr1_phase",
    "group_delay",
    "rho_from_bt",
    "gmsk_pulse",
    "grsk_pulse",
    "pulse_spectrum_analytic",
    "spectrum_points",
    "normalized_psd",
    "psd_db",
    "null_frequencies",
]

PSD_FLOOR_DB = -200.0
_SQRT_PI = math.sqrt(math.pi)
_SQRT2 = math.sqrt(2.0)


def _out(x):
    return x if np.ndim(x) else x.item()


def gaussian_spectrum(f):
    f = np.asarray(f, dtype=float)
    return np.exp(-np.pi * f * f)


def _one_minus_delay(f, T0):
    # 1 - exp(-2j pi f T0) written through sin so nulls come out ~1e-16
    x = np.pi * f * T0
    return 2j * np.sin(x) * np.exp(-1j * x)


def gr1_spectrum(f, T0: float):
    """Transform of GR_I: G(f) (1 - exp(-2j pi f T0)) / sqrt(2)."""
    f = np.asarray(f, dtype=float)
    return _out(gaussian_spectrum(f) / _SQRT2 * _one_minus_delay(f, T0))


def gr1_magnitude(f, T0: float):
    """|GR_I(f)| = G(f) sqrt(1 - cos(2 pi f T0)) = sqrt(2) G(f) |sin(pi f T0)|."""
    f = np.asarray(f, dtype=float)
    return _out(_SQRT2 * gaussian_spectrum(f) * np.abs(np.sin(np.pi * f * T0)))


def gr1_phase(f, T0: float, *, null_tol: float = 1e-12):
    """Affine phase response pi/2 - pi f T0 (unwrapped).

    Raises ``ValueError`` at spectral nulls (integer f*T0), where the phase
    is undefined.
    """
    f = np.asarray(f, dtype=float)
    if np.any(np.abs(np.sin(np.pi * f * T0)) < null_tol):
        raise ValueError("phase undefined at null")
    return _out(np.pi / 2.0 - np.pi * f * T0)


def group_delay(T0: float) -> float:
    """-(1/2pi) d(phase)/df for GR_I, i.e. T0 / 2 at every frequency."""
    if not T0 > 0:
        raise ValueError("T0 must be positive")
    return T0 / 2.0


def rho_from_bt(bt: float) -> float:
    """Gaussian width parameter for a 3 dB bandwidth-time product BT."""
    if not bt > 0:
        raise ValueError("BT must be positive")
    return math.sqrt(math.log(2.0)) / (math.pi * bt)


def gmsk_pulse(t, rho: float):
    """(sqrt(pi)/rho) exp(-pi t^2 / rho^2); integrates to sqrt(pi)."""
    if not rho > 0:
        raise ValueError("rho must be positive")
    t = np.asarray(t, dtype=float)
    return _out(_SQRT_PI / rho * np.exp(-np.pi * t * t / rho**2))


def grsk_pulse(t, eta: float, T0: float):
    """Difference of two width-``eta`` Gaussians ``T0`` apart, scaled by sqrt(pi)/(eta sqrt 2)."""
    if not eta > 0:
        raise ValueError("eta must be positive")
    t = np.asarray(t, dtype=float)
    amp = _SQRT_PI / (eta * _SQRT2)
    return _out(amp * (np.exp(-np.pi * t * t / eta**2) - np.exp(-np.pi * (t - T0) ** 2 / eta**2)))


def pulse_spectrum_analytic(kind: str, f, *, rho: float | None = None,
                            eta: float | None = None, T0: float | None = None):
    """Closed-form transform of the GMSK (``rho``) or GRSK (``eta``, ``T0``) pulse."""
    f = np.asarray(f, dtype=float)
    if kind == "gmsk":
        if rho is None or not rho > 0:
            raise ValueError("gmsk spectrum needs rho > 0")
        return _out(_SQRT_PI * np.exp(-np.pi * rho**2 * f * f) + 0j)
    if kind == "grsk":
        if eta is None or not eta > 0 or T0 is None:
            raise ValueError("grsk spectrum needs eta > 0 and T0")
        return _out(_SQRT_PI / _SQRT2 * np.exp(-np.pi * eta**2 * f * f) * _one_minus_delay(f, T0))
    raise ValueError(f"unknown pulse kind {kind!r}")


@dataclass(frozen=True)
class SpectrumPoint:
    f: float
    value: complex
    magnitude: float
    phase: float
    psd_db: float | None = None


def spectrum_points(f, values) -> list[SpectrumPoint]:
    f = np.atleast_1d(np.asarray(f, dtype=float))
    values = np.atleast_1d(np.asarray(values, dtype=complex))
    return [SpectrumPoint(float(fi), complex(v), float(abs(v)), float(np.angle(v)))
            for fi, v in zip(f, values)]


def psd_db(magnitudes, floor_db: float = PSD_FLOOR_DB) -> np.ndarray:
    """10 log10(|G|^2 / max |G|^2), clamped below at ``floor_db``."""
    mag = np.asarray(magnitudes, dtype=float)
    peak = float(np.max(mag)) if mag.size else 0.0
    if not peak > 0:
        raise ValueError("cannot normalise an all-zero spectrum")
    ratio = (mag / peak) ** 2
    with np.errstate(divide="ignore"):
        db = 10.0 * np.log10(ratio)
    return np.maximum(db, floor_db)


def normalized_psd(samples: Sequence[SpectrumPoint],
                   floor_db: float = PSD_FLOOR_DB) -> list[SpectrumPoint]:
    db = psd_db([s.magnitude for s in samples], floor_db)
    return [replace(s, psd_db=float(d)) for s, d in zip(samples, db)]


def null_frequencies(T0: float, f_max: float) -> list[float]:
    """Positive harmonics m / T0 up to and including ``f_max``."""
    if not T0 > 0 or not f_max > 0:
        raise ValueError("T0 and f_max must be positive")
    m_max = math.floor(f_max * T0 * (1 + 1e-12))
    return [m / T0 for m in range(1, m_max + 1)]
