"""Minkowski-Cohn moduli space of admissible lattices with three boundary pairs.

The determinant surface delta(p, sigma) lives over 1 <= sigma <= sigma_p
with the second coordinate tau pinned implicitly: the sum of the two
lattice generators must land on the unit-ball boundary.  The endpoint
constants sigma_p and tau_p have closed defining equations, and the two
endpoint branch values delta0 / delta1 have closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import Bracket, find_root

__all__ = [
    "ModuliPoint",
    "delta",
    "delta0",
    "delta1",
    "delta_doubled",
    "sigma_p",
    "tau_of_sigma",
    "tau_p",
]

# Residual size at an interval end below which the end itself is taken as
# the root; both sigma range ends are exact roots of the tau relation.
_ENDPOINT_RESIDUAL = 1e-11


def _check_p(p: float) -> float:
    # The surface is defined for p > 1; the formulas extend continuously to
    # p = 1, where they reproduce the exact limiting values, so 1 is allowed.
    p = float(p)
    if not math.isfinite(p) or p < 1.0:
        raise ValueError(f"moduli functions need a finite p >= 1, got {p!r}")
    return p


def sigma_p(p: float) -> float:
    """Upper end of the sigma range: (2^p - 1)^(1/p), increasing, in [1, 2)."""
    p = _check_p(p)
    return (2.0 ** p - 1.0) ** (1.0 / p)


def tau_p(p: float) -> float:
    """Unique root in [0, 1) of 2 (1 - t)^p = 1 + t^p."""
    p = _check_p(p)

    def f(t: float) -> float:
        return 2.0 * (1.0 - t) ** p - (1.0 + t ** p)

    # f(0) = 1 and f(1-) < 0, so the root is always enclosed.
    return find_root(f, Bracket.scan(f, 0.0, 1.0 - 1e-12), tol=1e-15)


def tau_of_sigma(p: float, sigma: float) -> float:
    """The tau in [0, tau_p] closing the third boundary pair.

    With A = (1 + tau^p)^(-1/p) and B = (1 + sigma^p)^(-1/p), the sum of
    the two generators is (A - B, A tau + B sigma); tau is chosen so that
    point sits on the unit-ball boundary.  Exact at both sigma range ends:
    tau(sigma_p) = 0 and tau(1) = tau_p.
    """
    p = _check_p(p)
    s_hi = sigma_p(p)
    if not 1.0 <= sigma <= s_hi * (1.0 + 1e-12):
        raise ValueError(f"sigma={sigma!r} outside [1, sigma_p={s_hi!r}] at p={p!r}")
    sigma = min(float(sigma), s_hi)
    b = (1.0 + sigma ** p) ** (-1.0 / p)

    def residual(t: float) -> float:
        a = (1.0 + t ** p) ** (-1.0 / p)
        return abs(a - b) ** p + (a * t + b * sigma) ** p - 1.0

    hi = tau_p(p)
    f_lo = residual(0.0)
    if abs(f_lo) <= _ENDPOINT_RESIDUAL:
        return 0.0
    f_hi = residual(hi)
    if abs(f_hi) <= _ENDPOINT_RESIDUAL:
        return hi
    # Interior root; the bracket construction fails loudly if the residual
    # somehow does not change sign over [0, tau_p].
    return find_root(residual, Bracket(0.0, hi, f_lo, f_hi), tol=1e-14)


@dataclass(frozen=True)
class ModuliPoint:
    """A point of the determinant surface with its value."""

    p: float
    tau: float
    sigma: float
    delta: float


def delta(p: float, sigma: float) -> ModuliPoint:
    """Determinant of the admissible lattice at (p, sigma):
    (tau + sigma)(1 + tau^p)^(-1/p)(1 + sigma^p)^(-1/p)."""
    p = _check_p(p)
    t = tau_of_sigma(p, sigma)
    value = (t + sigma) * (1.0 + t ** p) ** (-1.0 / p) * (1.0 + sigma ** p) ** (-1.0 / p)
    return ModuliPoint(p=p, tau=t, sigma=float(sigma), delta=value)


def delta0(p: float) -> float:
    """Branch value at the upper endpoint: delta(p, sigma_p) = sigma_p / 2."""
    return 0.5 * sigma_p(p)


def delta1(p: float) -> float:
    """Branch value at the unit endpoint: delta(p, 1) = 4^(-1/p)(1 + tau_p)/(1 - tau_p)."""
    p = _check_p(p)
    t = tau_p(p)
    return 4.0 ** (-1.0 / p) * (1.0 + t) / (1.0 - t)


def delta_doubled(p: float, sigma: float) -> float:
    """Determinant surface of the doubled ball: scaling the plane by 2
    multiplies lattice determinants by 4."""
    return 4.0 * delta(p, sigma).delta
