"""Gaussian pulse, delayed Gaussian pulse and Gauss-Ramanujan constructions.

Also hosts the overlap analysis between a Gaussian pulse ``g(t) = exp(-pi t^2)``
and its delayed copy, both for a fixed delay and for a delay drawn uniformly
from ``[T0 - delta, T0 + delta]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .ramanujan import sequence
from .specfun import DEFAULT_Q_CONSTANTS, QApproxConstants, q_approx, q_function

__all__ = [
    "SIGMA",
    "GauRamSpec",
    "OverlapReport",
    "gp",
    "dgp",
    "evaluate",
    "order_zero",
    "order_one",
    "order_two",
    "order_three",
    "from_ramanujan",
    "overlap_closed_form",
    "delay_for_overlap",
    "mean_overlap_exact",
    "mean_overlap_approx",
    "mean_overlap_from_q_approx",
    "mean_overlap_quadrature",
    "mean_overlap_monte_carlo",
    "overlap_report",
]

SIGMA = 1.0 / math.sqrt(2.0 * math.pi)
_SQRT_PI = math.sqrt(math.pi)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _scalar_or_array(x):
    return x if np.ndim(x) else float(x)


def gp(t):
    """Unit-area Gaussian pulse exp(-pi t^2)."""
    t = np.asarray(t, dtype=float)
    return _scalar_or_array(np.exp(-np.pi * t * t))


def dgp(t, T0: float):
    """Gaussian pulse delayed by ``T0``."""
    return gp(np.asarray(t, dtype=float) - T0)


@dataclass(frozen=True)
class GauRamSpec:
    """Weighted sum of delayed Gaussians.

    Each atom is ``exp(-pi (t - delay)^2 / eta^2)``; with ``amplitude_scaled``
    it is further multiplied by ``sqrt(pi) / eta`` (the pulse-shaping family
    used for GRSK).
    """

    weights: tuple[float, ...]
    delays: tuple[float, ...]
    T0: float
    width_eta: float = 1.0
    amplitude_scaled: bool = False
    label: str = ""

    def __post_init__(self):
        if len(self.weights) != len(self.delays) or not self.weights:
            raise ValueError("weights and delays must be non-empty and of equal length")
        if not self.T0 > 0:
            raise ValueError("T0 must be positive")
        if not self.width_eta > 0:
            raise ValueError("width_eta must be positive")

    def __call__(self, t):
        return evaluate(self, t)


def evaluate(spec: GauRamSpec, t):
    t = np.asarray(t, dtype=float)
    eta = spec.width_eta
    out = np.zeros_like(t)
    for w, d in zip(spec.weights, spec.delays):
        if w:
            out = out + w * np.exp(-np.pi * (t - d) ** 2 / eta**2)
    if spec.amplitude_scaled:
        out = out * (_SQRT_PI / eta)
    return _scalar_or_array(out)


def order_zero(T0: float = 1.0) -> GauRamSpec:
    return GauRamSpec((1.0,), (0.0,), T0, label="0")


def order_one(T0: float) -> GauRamSpec:
    return GauRamSpec((_INV_SQRT2, -_INV_SQRT2), (0.0, T0), T0, label="I")


def order_two(T0: float) -> GauRamSpec:
    return GauRamSpec((1.0, -0.5, -0.5), (0.0, T0, 2.0 * T0), T0, label="II")


def order_three(T0: float) -> GauRamSpec:
    return GauRamSpec((_INV_SQRT2, -_INV_SQRT2), (0.0, 2.0 * T0), T0, label="III")


def from_ramanujan(R: int, T0: float, *, width_eta: float = 1.0,
                   amplitude_scaled: bool = False) -> GauRamSpec:
    """GR_R: the unit-norm period-R Ramanujan sequence weighting g(t - k T0)."""
    seq = sequence(R)
    return GauRamSpec(seq.weights, tuple(k * T0 for k in range(R)), T0,
                      width_eta=width_eta, amplitude_scaled=amplitude_scaled,
                      label=f"R={R}")


def overlap_closed_form(T0):
    """<g, g(. - T0)> = exp(-pi T0^2 / 2) / sqrt(2)."""
    T0 = np.asarray(T0, dtype=float)
    return _scalar_or_array(_INV_SQRT2 * np.exp(-np.pi * T0 * T0 / 2.0))


def delay_for_overlap(epsilon: float, sigma: float = SIGMA) -> float:
    """Delay at which the pulse/delayed-pulse overlap drops to ``epsilon``."""
    if not 0 < epsilon < _INV_SQRT2:
        raise ValueError("epsilon must lie in (0, 1/sqrt(2))")
    return 2.0 * sigma * math.sqrt(-math.log(math.sqrt(2.0) * epsilon))


def _check_offset(T0: float, delta: float) -> None:
    if not delta > 0:
        raise ValueError("delta must be positive; use overlap_closed_form for a fixed delay")
    if not T0 > 0:
        raise ValueError("T0 must be positive")


def mean_overlap_exact(T0: float, delta: float) -> float:
    """Overlap averaged over a delay uniform on [T0 - delta, T0 + delta]."""
    _check_offset(T0, delta)
    return float((q_function(_SQRT_PI * (T0 - delta)) - q_function(_SQRT_PI * (T0 + delta)))
                 / (2.0 * delta))


def mean_overlap_approx(T0: float, delta: float,
                        constants: QApproxConstants = DEFAULT_Q_CONSTANTS) -> float:
    """Closed-form approximation of :func:`mean_overlap_exact` (sinh form).

    Obtained by replacing Q with its exponential-quadratic fit; the prefactor
    carries ``alpha * pi * delta^2``, which is what the expansion of
    ``alpha y^2`` at ``y = sqrt(pi) (T0 +/- delta)`` produces.
    """
    _check_offset(T0, delta)
    a, b, c = constants.alpha, constants.beta, constants.gamma
    prefactor = math.exp(-(a * math.pi * T0**2 + a * math.pi * delta**2 + b * _SQRT_PI * T0 + c))
    return prefactor * math.sinh(2.0 * a * math.pi * T0 * delta + b * _SQRT_PI * delta) / delta


def mean_overlap_from_q_approx(T0: float, delta: float,
                               constants: QApproxConstants = DEFAULT_Q_CONSTANTS) -> float:
    """Difference-of-approximated-Q form; algebraically equal to the sinh form."""
    _check_offset(T0, delta)
    lo = q_approx(_SQRT_PI * (T0 - delta), constants)
    hi = q_approx(_SQRT_PI * (T0 + delta), constants)
    return (lo - hi) / (2.0 * delta)


def mean_overlap_quadrature(T0: float, delta: float,
                            settings: numerics.QuadratureSettings = numerics.DEFAULT_SETTINGS) -> float:
    """Quadrature of exp(-pi tau^2/2) / (2 delta sqrt 2) over the delay interval."""
    _check_offset(T0, delta)
    val = numerics.integrate(lambda tau: np.exp(-np.pi * tau * tau / 2.0),
                             T0 - delta, T0 + delta, settings)
    return val / (2.0 * delta * math.sqrt(2.0))


def mean_overlap_monte_carlo(T0: float, delta: float, seed: int,
                             n: int = 1_000_000) -> tuple[float, float]:
    """Sample mean and its standard error over seeded uniform delays."""
    _check_offset(T0, delta)
    tau = numerics.uniform_random(seed, T0 - delta, T0 + delta, n)
    samples = overlap_closed_form(tau)
    return float(samples.mean()), float(samples.std(ddof=1) / math.sqrt(n))


@dataclass(frozen=True)
class OverlapReport:
    T0: float
    delta: float
    exact: float
    approx: float
    oracle: float
    percent_error_approx_vs_exact: float
    monte_carlo: float | None = None
    monte_carlo_stderr: float | None = None
    seed: int | None = None


def overlap_report(T0: float, delta: float, seed: int | None = None, *,
                   monte_carlo_samples: int = 0,
                   constants: QApproxConstants = DEFAULT_Q_CONSTANTS) -> OverlapReport:
    """Exact, approximate and quadrature mean overlap for one (T0, delta).

    A Monte-Carlo estimate is attached when ``monte_carlo_samples > 0``
    (which requires ``seed``).
    """
    exact = mean_overlap_exact(T0, delta)
    approx = mean_overlap_approx(T0, delta, constants)
    oracle = mean_overlap_quadrature(T0, delta)
    mc = mc_err = None
    if monte_carlo_samples:
        if seed is None:
            raise ValueError("a seed is required for the Monte-Carlo estimate")
        mc, mc_err = mean_overlap_monte_carlo(T0, delta, seed, monte_carlo_samples)
    return OverlapReport(T0, delta, exact, approx, oracle,
                         100.0 * (approx - exact) / exact, mc, mc_err, seed)
