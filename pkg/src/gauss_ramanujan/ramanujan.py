"""Ramanujan sums, Euler's totient and normalised Ramanujan sequences."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "MAX_PERIOD",
    "RamanujanSequence",
    "ramanujan_sum",
    "ramanujan_sums",
    "totient",
    "sequence",
    "orthogonality_defect",
]

MAX_PERIOD = 10_000
_IMAG_TOL = 1e-9


def _check_period(R: int) -> None:
    if R < 1:
        raise ValueError(f"period must be a positive integer, got {R}")
    if R > MAX_PERIOD:
        raise ValueError(f"period {R} exceeds the direct-evaluation cap {MAX_PERIOD}")


@lru_cache(maxsize=256)
def _residues(R: int) -> np.ndarray:
    return np.array([k for k in range(1, R + 1) if math.gcd(k, R) == 1])


def ramanujan_sums(R: int, m) -> np.ndarray:
    """Vectorised S_R(m): sum of exp(2j*pi*k*m/R) over 1 <= k <= R, gcd(k, R) = 1."""
    _check_period(R)
    m = np.atleast_1d(np.asarray(m, dtype=np.int64))
    # reduce k*m mod R in integers so large m does not lose phase accuracy
    phase = np.outer(m % R, _residues(R)) % R
    terms = np.exp(2j * np.pi * phase / R)
    total = terms.sum(axis=1)
    worst = float(np.max(np.abs(total.imag)))
    if worst > _IMAG_TOL:
        raise ArithmeticError(f"Ramanujan sum imaginary residue {worst:.3g} exceeds {_IMAG_TOL}")
    return total.real


def ramanujan_sum(R: int, m: int) -> float:
    """Single Ramanujan sum S_R(m) as a real number."""
    return float(ramanujan_sums(R, m)[0])


def totient(k: int) -> int:
    """Euler's totient: how many n in [1, k] are coprime to k."""
    if k < 1:
        raise ValueError(f"totient needs k >= 1, got {k}")
    result, n, p = k, k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@dataclass(frozen=True)
class RamanujanSequence:
    """One period of S_R with its unit-L2-norm weights."""

    period: int
    raw: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def listed_form(self) -> tuple[float, ...]:
        """Raw values scaled so the first entry is 1 (the ``{1, -1/2, -1/2}`` style)."""
        return tuple(r / self.raw[0] for r in self.raw)


def sequence(R: int) -> RamanujanSequence:
    """Period-R sequence; raw values are snapped to the integers they must be."""
    sums = ramanujan_sums(R, np.arange(R))
    raw = np.rint(sums) + 0.0  # + 0.0 clears negative zeros
    worst = float(np.max(np.abs(sums - raw)))
    if worst > _IMAG_TOL:
        raise ArithmeticError(f"Ramanujan sum is {worst:.3g} away from an integer")
    weights = raw / np.linalg.norm(raw)
    return RamanujanSequence(R, tuple(raw.tolist()), tuple(weights.tolist()))


def orthogonality_defect(R1: int, R2: int) -> float:
    """Sum of S_R1(n) S_R2(n) over one common period (vanishes for R1 != R2)."""
    if R1 == R2:
        raise ValueError("orthogonality_defect needs distinct periods")
    n = np.arange(math.lcm(R1, R2))
    return float(np.dot(ramanujan_sums(R1, n), ramanujan_sums(R2, n)))
