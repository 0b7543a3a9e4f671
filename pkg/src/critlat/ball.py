"""Planar p-balls |x|^p + |y|^p <= 1 and their max-norm limit.

Covers the gauge (membership functional), p-norm length, area, scaled
balls, and the classification of exponents into the Minkowski, Davis and
Chebyshev-Cohn families split at the Davis constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .numerics import gamma

__all__ = [
    "Ball",
    "BallClass",
    "Exponent",
    "INF",
    "area",
    "classify",
    "gauge",
    "lp_length",
]

STRICT_INTERIOR_TOL = 1e-9


@dataclass(frozen=True)
class Exponent:
    """Ball exponent: a finite real p >= 1, or math.inf for the max-norm limit.

    The infinite case is a genuine symbolic variant (every consumer
    branches on ``is_finite``), never a large float fed to ``**``.
    """

    p: float

    def __post_init__(self):
        if math.isnan(self.p) or self.p < 1.0:
            raise ValueError(f"exponent must be a real >= 1 or infinity, got {self.p!r}")
        object.__setattr__(self, "p", float(self.p))

    @classmethod
    def finite(cls, p: float) -> "Exponent":
        if not math.isfinite(p):
            raise ValueError(f"finite exponent required, got {p!r}")
        return cls(float(p))

    @classmethod
    def parse(cls, text: str) -> "Exponent":
        """Accepts a decimal literal or 'inf' / 'infinity' / 'oo'."""
        token = text.strip().lower()
        if token in ("inf", "infinity", "oo"):
            return INF
        try:
            value = float(token)
        except ValueError:
            raise ValueError(f"cannot parse exponent {text!r}") from None
        return cls.finite(value)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.p)

    def __str__(self) -> str:
        return format(self.p, "g") if self.is_finite else "inf"


INF = Exponent(math.inf)


def gauge(e: Exponent, point: tuple[float, float]) -> float:
    """Membership functional of the unit ball.

    |x|^p + |y|^p for finite p, max(|x|, |y|) in the limit; the point
    lies in the closed unit ball iff the value is <= 1.
    """
    x, y = point
    if not e.is_finite:
        return max(abs(x), abs(y))
    return abs(x) ** e.p + abs(y) ** e.p


def lp_length(e: Exponent, point: tuple[float, float]) -> float:
    """The p-norm of the point: the scale at which it hits the boundary."""
    ax, ay = abs(point[0]), abs(point[1])
    big = max(ax, ay)
    if not e.is_finite or big == 0.0:
        return big
    # factored form avoids overflow of |x|^p for large p
    return big * ((ax / big) ** e.p + (ay / big) ** e.p) ** (1.0 / e.p)


@dataclass(frozen=True)
class Ball:
    """The region scale * D_p, all points with gauge(point / scale) <= 1."""

    exponent: Exponent
    scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"scale must be positive and finite, got {self.scale!r}")

    def contains(self, point: tuple[float, float]) -> bool:
        """Closed membership; boundary points count as inside."""
        x, y = point
        return gauge(self.exponent, (x / self.scale, y / self.scale)) <= 1.0

    def strictly_inside(self, point: tuple[float, float], tol: float = STRICT_INTERIOR_TOL) -> bool:
        """Interior membership with a tolerance band inside the boundary."""
        x, y = point
        return gauge(self.exponent, (x / self.scale, y / self.scale)) < 1.0 - tol


def area(e: Exponent) -> float:
    """Area of the unit ball: 4 Gamma(1 + 1/p)^2 / Gamma(1 + 2/p), or 4 at the limit."""
    if not e.is_finite:
        return 4.0
    return 4.0 * gamma(1.0 + 1.0 / e.p) ** 2 / gamma(1.0 + 2.0 / e.p)


class BallClass(Enum):
    """Partition of exponents in [1, inf] by packing behaviour."""

    LIMITING_MINKOWSKI = "limiting-minkowski"
    MINKOWSKI = "minkowski"
    DAVIS = "davis"
    CHEBYSHEV_COHN = "chebyshev-cohn"
    LIMITING_CHEBYSHEV = "limiting-chebyshev"


def classify(e: Exponent, p0: float) -> BallClass:
    """Classify the ball: p=1 and p=inf are the limiting cases, 1<p<2 is
    Minkowski, 2 <= p < p0 is Davis, p >= p0 is Chebyshev-Cohn.

    p0 is the Davis constant, supplied by the caller (see
    critical.davis_constant); it must lie in its proven range (2.57, 2.58).
    """
    if not 2.57 < p0 < 2.58:
        raise ValueError(f"davis constant outside (2.57, 2.58): {p0!r}")
    if not e.is_finite:
        return BallClass.LIMITING_CHEBYSHEV
    p = e.p
    if p == 1.0:
        return BallClass.LIMITING_MINKOWSKI
    if p < 2.0:
        return BallClass.MINKOWSKI
    if p < p0:
        return BallClass.DAVIS
    return BallClass.CHEBYSHEV_COHN
