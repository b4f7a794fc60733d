"""Special functions used by the closed forms.

erf/erfc/erfi/Dawson are delegated to :mod:`scipy.special`; the test suite
checks them against quadrature of their defining integrals.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

__all__ = [
    "QApproxConstants",
    "erf",
    "erfc",
    "erfi",
    "dawson",
    "q_function",
    "q_approx",
]


@dataclass(frozen=True)
class QApproxConstants:
    """Coefficients of the exponential-quadratic Q-function tail fit."""

    alpha: float = 0.3842
    beta: float = 0.7640
    gamma: float = 0.6964

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) <= 0:
            raise ValueError("Q-approximation constants must be strictly positive")


DEFAULT_Q_CONSTANTS = QApproxConstants()


def erf(x):
    return special.erf(x)


def erfc(x):
    return special.erfc(x)


def erfi(x):
    """Imaginary error function, (2/sqrt(pi)) * int_0^x exp(s^2) ds."""
    return special.erfi(x)


def dawson(x):
    """Dawson's integral D+(x) = exp(-x^2) * int_0^x exp(u^2) du."""
    return special.dawsn(x)


def q_function(y):
    """Gaussian right-tail probability Q(y) = erfc(y / sqrt(2)) / 2."""
    return 0.5 * special.erfc(np.asarray(y, dtype=float) / np.sqrt(2.0))


def q_approx(y, constants: QApproxConstants = DEFAULT_Q_CONSTANTS):
    """Tail approximation Q(y) ~ exp(-(alpha y^2 + beta y + gamma)) for y >= 0."""
    y = np.asarray(y, dtype=float)
    if np.any(y < 0):
        raise ValueError("q_approx is only defined for y >= 0")
    c = constants
    out = np.exp(-(c.alpha * y * y + c.beta * y + c.gamma))
    return out if out.ndim else float(out)
