"""GRM continuous-wave modulation and GRSK continuous-phase modulation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import numerics
from .ramanujan import sequence, totient
from .specfun import erf

__all__ = [
    "GrmParams",
    "CpmConfig",
    "ModulationIndex",
    "Bandwidth",
    "grm_iq",
    "grm_waveform",
    "grm_waveform_canonical",
    "grm_envelope",
    "grm_spectrum",
    "grm_phase",
    "grm_modulation_index",
    "grm_energy_power",
    "grm_energy_quadrature",
    "grm_bandwidth",
    "default_kappa",
    "grsk_freq_pulse",
    "grsk_phase_pulse",
    "grsk_phase_pulse_quadrature",
    "grsk_phase",
    "grsk_instantaneous_frequency",
    "grsk_baseband",
    "grsk_waveform",
    "generalized_grsk_pulse",
]

_SQRT_PI = math.sqrt(math.pi)
_SQRT2 = math.sqrt(2.0)
_INV_SQRT2 = 1.0 / _SQRT2


def _out(x):
    return x if np.ndim(x) else x.item()


# --------------------------------------------------------------------- GRM


@dataclass(frozen=True)
class GrmParams:
    fc: float
    T0: float
    Ts: float = 1.0

    def __post_init__(self):
        if not (self.fc > 0 and self.T0 > 0 and self.Ts > 0):
            raise ValueError("fc, T0 and Ts must all be positive")


def grm_iq(t, T0: float):
    """In-phase and quadrature envelopes: I = g(t)/sqrt2, Q = -g(t - T0)/sqrt2."""
    t = np.asarray(t, dtype=float)
    i = _INV_SQRT2 * np.exp(-np.pi * t * t)
    q = -_INV_SQRT2 * np.exp(-np.pi * (t - T0) ** 2)
    return _out(i), _out(q)


def grm_envelope(t, T0: float):
    """sqrt(I^2 + Q^2)."""
    i, q = grm_iq(t, T0)
    return _out(np.hypot(i, q))


def grm_waveform(t, params: GrmParams):
    """I(t) cos(2 pi fc t) - g(t - T0) sin(2 pi fc t) / sqrt2."""
    t = np.asarray(t, dtype=float)
    wc = 2.0 * np.pi * params.fc * t
    return _out(_INV_SQRT2 * np.exp(-np.pi * t * t) * np.cos(wc)
                - _INV_SQRT2 * np.exp(-np.pi * (t - params.T0) ** 2) * np.sin(wc))


def grm_waveform_canonical(t, params: GrmParams, conjugate: bool = False):
    """Complex-envelope form Re{(I + jQ) exp(2j pi fc t)} = I cos - Q sin.

    With Q negative this is I cos + g(t - T0) sin / sqrt2, the mirror image
    of :func:`grm_waveform` in the quadrature term. ``conjugate=True``
    evaluates Re{(I - jQ) exp(2j pi fc t)}, which reproduces
    :func:`grm_waveform` exactly.
    """
    t = np.asarray(t, dtype=float)
    i, q = grm_iq(t, params.T0)
    sign = -1.0 if conjugate else 1.0
    env = np.asarray(i) + sign * 1j * np.asarray(q)
    return _out(np.real(env * np.exp(2j * np.pi * params.fc * t)))


def grm_spectrum(f, params: GrmParams, form: str = "derived"):
    """Transform of the GRM bandpass waveform.

    ``form="derived"`` is the exact transform of :func:`grm_waveform`.
    ``form="printed"`` is the widely quoted shortcut that factors out a
    common ``exp(-j(2 pi f T0 - pi/2))``; it drops the ``exp(+-2j pi fc T0)``
    carrier-phase terms and flips the sign of the quadrature branch, so it
    does not match the waveform (kept only for comparison).
    """
    f = np.asarray(f, dtype=float)
    fc, T0 = params.fc, params.T0
    up = np.exp(-np.pi * (f - fc) ** 2)
    down = np.exp(-np.pi * (f + fc) ** 2)
    k = 1.0 / (2.0 * _SQRT2)
    if form == "derived":
        quad = 1j * k * (up * np.exp(-2j * np.pi * (f - fc) * T0)
                         - down * np.exp(-2j * np.pi * (f + fc) * T0))
        return _out(k * (up + down) + quad)
    if form == "printed":
        return _out(k * (up + down) - k * np.exp(-1j * (2.0 * np.pi * f * T0 - np.pi / 2.0)) * (up - down))
    raise ValueError(f"unknown form {form!r}")


def grm_phase(t, T0: float):
    """Complex-envelope phase -arctan(exp(pi (2 T0 t - T0^2))), in (-pi/2, 0)."""
    t = np.asarray(t, dtype=float)
    with np.errstate(over="ignore"):
        return _out(-np.arctan(np.exp(np.pi * (2.0 * T0 * t - T0 * T0))))


class ModulationIndex(NamedTuple):
    nominal: float
    window_max: float
    window: tuple[float, float]


def grm_modulation_index(T0: float = 1.0, n_points: int = 20001) -> ModulationIndex:
    """Nominal index pi/4 (phase at the pulse crossing) and max |phase| on [-T0, 2 T0].

    The phase is monotone in t, so the window maximum sits at the right
    edge and exceeds pi/4; both numbers are returned for comparison.
    """
    lo, hi = -T0, 2.0 * T0
    t = np.linspace(lo, hi, n_points)
    return ModulationIndex(math.pi / 4.0, float(np.max(np.abs(grm_phase(t, T0)))), (lo, hi))


def grm_energy_power(params: GrmParams) -> tuple[float, float]:
    """Pulse energy 1/sqrt2 and average power E / Ts."""
    if not params.Ts > 0:
        raise ValueError("Ts must be positive")
    energy = _INV_SQRT2
    return energy, energy / params.Ts


def grm_energy_quadrature(T0: float,
                          settings: numerics.QuadratureSettings = numerics.DEFAULT_SETTINGS) -> float:
    def power(t):
        i, q = grm_iq(t, T0)
        return i * i + q * q
    return numerics.integrate(power, -math.inf, math.inf, settings, center=T0 / 2.0, width=1.0 + T0)


class Bandwidth(NamedTuple):
    f_3db: float
    fwhm: float
    bw: float


def grm_bandwidth(T: float = 1.0) -> Bandwidth:
    if not T > 0:
        raise ValueError("T must be positive")
    f3 = math.sqrt(math.log(2.0) / (2.0 * math.pi))
    fwhm = 2.0 * f3
    return Bandwidth(f3, fwhm, fwhm / T)


# -------------------------------------------------------------------- GRSK


def default_kappa(T: float, T0: float) -> float:
    """kappa making the closed-form phase pulse equal 1/2 at t = T."""
    return _SQRT2 / (float(erf(_SQRT_PI * T)) - float(erf(_SQRT_PI * (T - T0))))


@dataclass(frozen=True)
class CpmConfig:
    """GRSK modulator settings.

    ``phase_pulse`` selects what enters the CPM phase sum: ``"integral"``
    (default) is the running integral of the frequency pulse, which starts
    at zero and keeps the phase continuous; ``"printed"`` is the closed form
    of :func:`grsk_phase_pulse`, which is offset by a constant and therefore
    steps the phase at every symbol boundary.
    """

    fc: float
    T: float
    h: float
    E: float
    T0: float
    bits: tuple[int, ...] = ()
    kappa: float | None = None
    phase_pulse: str = "integral"

    def __post_init__(self):
        if not self.T > self.T0 > 0:
            raise ValueError("need T > T0 > 0")
        if not (self.h > 0 and self.E > 0):
            raise ValueError("h and E must be positive")
        if self.fc < 0:
            raise ValueError("fc must be non-negative")
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (1, -1) for b in self.bits):
            raise ValueError("bits must be +1 or -1")
        if self.kappa is None:
            object.__setattr__(self, "kappa", default_kappa(self.T, self.T0))
        if self.phase_pulse not in ("integral", "printed"):
            raise ValueError("phase_pulse must be 'integral' or 'printed'")

    @property
    def amplitude(self) -> float:
        return math.sqrt(2.0 * self.E / self.T)


def grsk_freq_pulse(t, config: CpmConfig):
    """kappa/sqrt2 (g(t) - g(t - T0)) on [0, T], zero elsewhere."""
    t = np.asarray(t, dtype=float)
    body = config.kappa * _INV_SQRT2 * (np.exp(-np.pi * t * t) - np.exp(-np.pi * (t - config.T0) ** 2))
    return _out(np.where((t >= 0.0) & (t <= config.T), body, 0.0))


def grsk_phase_pulse(t, config: CpmConfig):
    """Closed form kappa/(2 sqrt2) [erf(sqrt(pi) t) - erf(sqrt(pi)(t - T0))].

    Arguments outside [0, T] are clamped to the interval ends. Note that
    this differs from the running integral of :func:`grsk_freq_pulse` by the
    constant ``kappa/(2 sqrt2) erf(sqrt(pi) T0)``.
    """
    t = np.clip(np.asarray(t, dtype=float), 0.0, config.T)
    k = config.kappa / (2.0 * _SQRT2)
    return _out(k * (erf(_SQRT_PI * t) - erf(_SQRT_PI * (t - config.T0))))


def grsk_phase_pulse_quadrature(t: float, config: CpmConfig,
                                settings: numerics.QuadratureSettings = numerics.DEFAULT_SETTINGS) -> float:
    """Running integral of the frequency pulse from 0 to t (clamped to [0, T])."""
    t = min(max(float(t), 0.0), config.T)
    # integrate the unit-kappa shape so the tolerance does not scale with kappa
    T0 = config.T0
    shape = numerics.integrate(
        lambda s: _INV_SQRT2 * (np.exp(-np.pi * s * s) - np.exp(-np.pi * (s - T0) ** 2)), 0.0, t, settings)
    return config.kappa * shape


def _phase_pulse(t, config: CpmConfig):
    q = np.asarray(grsk_phase_pulse(t, config))
    if config.phase_pulse == "integral":
        q = q - grsk_phase_pulse(0.0, config)
    return q


def _require_bits(config: CpmConfig) -> None:
    if not config.bits:
        raise ValueError("GRSK synthesis needs a non-empty bit sequence")


def grsk_phase(t, config: CpmConfig):
    """Excess phase 2 pi h sum_k d_k q(t - kT) over symbols already started."""
    _require_bits(config)
    t = np.asarray(t, dtype=float)
    acc = np.zeros_like(t)
    for k, d in enumerate(config.bits):
        start = k * config.T
        acc = acc + np.where(t >= start, d * _phase_pulse(t - start, config), 0.0)
    return _out(2.0 * np.pi * config.h * acc)


def grsk_instantaneous_frequency(t, config: CpmConfig):
    """Excess frequency h sum_k d_k g_GR(t - kT) in cycles per unit time."""
    _require_bits(config)
    t = np.asarray(t, dtype=float)
    acc = np.zeros_like(t)
    for k, d in enumerate(config.bits):
        acc = acc + d * np.asarray(grsk_freq_pulse(t - k * config.T, config))
    return _out(config.h * acc)


def grsk_baseband(t, config: CpmConfig):
    """Complex envelope sqrt(2E/T) exp(j phase)."""
    return _out(config.amplitude * np.exp(1j * np.asarray(grsk_phase(t, config))))


def grsk_waveform(t, config: CpmConfig):
    """sqrt(2E/T) cos(2 pi fc t + excess phase)."""
    t = np.asarray(t, dtype=float)
    return _out(config.amplitude * np.cos(2.0 * np.pi * config.fc * t + np.asarray(grsk_phase(t, config))))


def generalized_grsk_pulse(t, k: int, T0: float, eta: float):
    """k-th order pulse built from the first phi(k) Ramanujan-sum coefficients.

    sum_{n < phi(k)} r_k(n)/||r|| (sqrt(pi)/eta) exp(-pi (t - n T0)^2 / eta^2),
    with the norm taken over those phi(k) coefficients.
    """
    if k < 1:
        raise ValueError("pulse order k must be >= 1")
    if not eta > 0:
        raise ValueError("eta must be positive")
    coeffs = np.array(sequence(k).raw[: totient(k)])
    coeffs = coeffs / np.linalg.norm(coeffs)
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for n, c in enumerate(coeffs):
        out = out + c * np.exp(-np.pi * (t - n * T0) ** 2 / eta**2)
    return _out(_SQRT_PI / eta * out)
