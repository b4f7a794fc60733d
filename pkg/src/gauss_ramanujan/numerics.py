"""Numerical substrate: adaptive quadrature, sampling grids and a seeded RNG.

Integrands are called with numpy arrays of abscissae and must return an
array of the same shape. Every function in the package is written that way.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "Grid",
    "QuadratureSettings",
    "QuadratureError",
    "integrate",
    "inner_product",
    "uniform_random",
    "splitmix64",
]

Integrand = Callable[[np.ndarray], np.ndarray]

# 15-point Kronrod nodes on [-1, 1] (positive half) with the embedded
# 7-point Gauss rule living on the odd-indexed nodes.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_W = np.zeros(15)
_GAUSS_W[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


class QuadratureError(ArithmeticError):
    """Quadrature did not converge; ``estimate`` holds the last value."""

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerance and effort knobs for :func:`integrate`.

    ``infinite_tail_cutoff`` is measured in multiples of the integrand's
    effective width (the ``width`` argument of :func:`integrate`).
    """

    abs_tol: float = 1e-10
    max_subdivisions: int = 60
    infinite_tail_cutoff: float = 10.0

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if not self.infinite_tail_cutoff > 0:
            raise ValueError("infinite_tail_cutoff must be positive")


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True)
class Grid:
    """Uniform sampling grid with inclusive endpoints."""

    t_start: float
    t_end: float
    n_points: int

    def __post_init__(self):
        if not self.t_end > self.t_start:
            raise ValueError("t_end must exceed t_start")
        if self.n_points < 2:
            raise ValueError("n_points must be >= 2")

    @property
    def step(self) -> float:
        return (self.t_end - self.t_start) / (self.n_points - 1)

    def samples(self) -> np.ndarray:
        return self.t_start + np.arange(self.n_points) * self.step

    @classmethod
    def parse(cls, text: str) -> "Grid":
        """Build a grid from ``"a:b:n"`` (inclusive endpoints, ``n`` points)."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like a:b:n, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))


def _gk15(f: Integrand, a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y = np.asarray(f(mid + half * _NODES), dtype=float)
    if y.shape != _NODES.shape:
        y = np.broadcast_to(y, _NODES.shape)
    if not np.all(np.isfinite(y)):
        raise QuadratureError(f"integrand not finite on [{a}, {b}]", math.nan, math.inf)
    kronrod = half * float(_KRONROD_W @ y)
    gauss = half * float(_GAUSS_W @ y)
    return kronrod, abs(kronrod - gauss)


def _truncate(f: Integrand, a: float, b: float, center: float, width: float,
              settings: QuadratureSettings) -> tuple[float, float]:
    span = settings.infinite_tail_cutoff * width
    floor = settings.abs_tol / 10.0

    def decayed(edge: float, direction: float, length: float) -> bool:
        probe = edge + direction * length * np.array([0.0, 0.25, 0.5, 1.0])
        return bool(np.all(np.abs(np.asarray(f(probe), dtype=float)) < floor))

    lo, hi = a, b
    if math.isinf(a):
        anchor = min(center, b) if math.isfinite(b) else center
        length = span
        for _ in range(60):
            if decayed(anchor - length, -1.0, length):
                break
            length *= 2.0
        else:
            raise QuadratureError("integrand envelope never decays on the left", math.nan, math.inf)
        lo = anchor - length
    if math.isinf(b):
        anchor = max(center, a) if math.isfinite(a) else center
        length = span
        for _ in range(60):
            if decayed(anchor + length, 1.0, length):
                break
            length *= 2.0
        else:
            raise QuadratureError("integrand envelope never decays on the right", math.nan, math.inf)
        hi = anchor + length
    return lo, hi


def _panels(a: float, b: float, center: float, width: float,
            cutoff: float) -> list[tuple[float, float]]:
    """Initial partition: width-sized panels near the envelope, doubling outside.

    A single 15-point panel much wider than the integrand can sample nothing
    but tails and report a spuriously tiny error, so the adaptive loop starts
    from panels no wider than ``width`` over ``center +/- cutoff * width``.
    """
    core_lo = max(a, center - cutoff * width)
    core_hi = min(b, center + cutoff * width)
    points = []
    if core_lo < core_hi:
        n = max(1, math.ceil((core_hi - core_lo) / width))
        points = list(np.linspace(core_lo, core_hi, n + 1))
    else:
        # envelope lies outside [a, b]; grow panels away from the nearer end
        core_lo = core_hi = a if center < a else b
        points = [core_lo]
    step = width
    left = [core_lo]
    while left[-1] > a:
        left.append(max(a, left[-1] - step))
        step *= 2.0
    step = width
    right = [core_hi]
    while right[-1] < b:
        right.append(min(b, right[-1] + step))
        step *= 2.0
    edges = sorted(set(left[1:] + points + right[1:]))
    return list(zip(edges[:-1], edges[1:]))


def integrate(f: Integrand, a: float, b: float,
              settings: QuadratureSettings = DEFAULT_SETTINGS, *,
              center: float = 0.0, width: float = 1.0) -> float:
    """Integrate ``f`` over ``[a, b]`` by globally adaptive Gauss-Kronrod bisection.

    Parameters
    ----------
    f : callable
        Vectorised integrand.
    a, b : float
        Limits; either may be infinite. Reversed limits negate the result.
    settings : QuadratureSettings
        Absolute tolerance and subdivision budget.
    center, width : float
        Location and scale of the integrand's envelope. Infinite limits are
        cut at ``center -/+ infinite_tail_cutoff * width`` and pushed further
        out until ``|f|`` falls below ``abs_tol / 10`` there.

    Raises
    ------
    QuadratureError
        If the error estimate is still above ``abs_tol`` after
        ``max_subdivisions`` bisections.
    """
    if a == b:
        return 0.0
    if a > b:
        return -integrate(f, b, a, settings, center=center, width=width)
    if math.isinf(a) or math.isinf(b):
        a, b = _truncate(f, a, b, center, width, settings)

    heap = []
    for lo, hi in _panels(a, b, center, width, settings.infinite_tail_cutoff):
        value, err = _gk15(f, lo, hi)
        heap.append((-err, lo, hi, value))
    heapq.heapify(heap)
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    for _ in range(settings.max_subdivisions):
        if total_err <= settings.abs_tol:
            return total
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
    # re-sum to shed accumulated rounding from the running totals
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    if total_err <= settings.abs_tol:
        return total
    raise QuadratureError(
        f"quadrature did not converge: estimate {total!r}, error {total_err:.3g}",
        total, total_err)


def inner_product(f: Integrand, g: Integrand,
                  settings: QuadratureSettings = DEFAULT_SETTINGS, **kwargs) -> float:
    """Real inner product ``<f, g>`` over the whole line."""
    return integrate(lambda t: f(t) * g(t), -math.inf, math.inf, settings, **kwargs)


_GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, n: int) -> np.ndarray:
    """First ``n`` outputs of the SplitMix64 generator started at ``seed``.

    State advances by the golden-ratio increment 0x9E3779B97F4A7C15 and each
    output is the standard Stafford variant-13 finaliser of the new state.
    Evaluated in counter form, so ``splitmix64(s, n)[:k] == splitmix64(s, k)``.
    """
    counter = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed % 2**64) + counter * _GOLDEN_GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniform_random(seed: int, lo: float, hi: float, n: int) -> np.ndarray:
    """``n`` reproducible draws from U[lo, hi).

    The top 53 bits of each :func:`splitmix64` output become a double in
    [0, 1), which is then mapped affinely onto the interval.
    """
    if not lo < hi:
        raise ValueError("uniform_random needs lo < hi")
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = splitmix64(seed, n) >> np.uint64(11)
    u = bits.astype(np.float64) * 2.0**-53
    return lo + (hi - lo) * u
