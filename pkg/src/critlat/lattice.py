"""Planar lattices: determinants, point enumeration inside gauge balls,
shortest vectors, admissibility and packing verification, and a brute-force
scan over the moduli space.

Everything here is deliberately enumeration-based; in two dimensions at the
radii involved, complete enumeration is cheap and serves as the independent
oracle for the closed-form results in the other modules.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import moduli
from .ball import Ball, Exponent, area, gauge

__all__ = [
    "Lattice2",
    "NotAPackingError",
    "ScanReport",
    "VerifyReport",
    "density",
    "determinant",
    "enumerate_points",
    "from_moduli",
    "is_admissible",
    "is_packing",
    "min_gauge",
    "moduli_scan",
    "random_packing_lattice",
]

# Tolerances: admissibility slack absorbs root-finding error (~1e-13) with
# orders to spare; boundary detection is looser still.
ADMISSIBILITY_SLACK = 1e-9
BOUNDARY_TOL = 1e-8
_RADIUS_SLACK = 1e-12
_BOX_LIMIT = 4_000_000


class NotAPackingError(ValueError):
    """Raised when a density is requested for a lattice that does not pack."""


@dataclass(frozen=True)
class Lattice2:
    """A planar lattice given by two basis vectors a and b."""

    a: tuple[float, float]
    b: tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "a", (float(self.a[0]), float(self.a[1])))
        object.__setattr__(self, "b", (float(self.b[0]), float(self.b[1])))
        if self.a[0] * self.b[1] - self.a[1] * self.b[0] == 0.0:
            raise ValueError(f"degenerate basis: a={self.a!r}, b={self.b!r}")

    def scaled(self, factor: float) -> "Lattice2":
        return Lattice2(
            (factor * self.a[0], factor * self.a[1]),
            (factor * self.b[0], factor * self.b[1]),
        )


def determinant(lat: Lattice2) -> float:
    """Absolute determinant of the basis."""
    return abs(lat.a[0] * lat.b[1] - lat.a[1] * lat.b[0])


def from_moduli(p: float, tau: float, sigma: float) -> Lattice2:
    """Admissible-lattice basis at moduli coordinates (tau, sigma).

    First generator ((1+tau^p)^(-1/p), tau (1+tau^p)^(-1/p)); the second
    has negated x coordinate: (-(1+sigma^p)^(-1/p), sigma (1+sigma^p)^(-1/p)).
    Its determinant equals the surface value delta(p, sigma).
    """
    a_norm = (1.0 + tau ** p) ** (-1.0 / p)
    b_norm = (1.0 + sigma ** p) ** (-1.0 / p)
    return Lattice2((a_norm, tau * a_norm), (-b_norm, sigma * b_norm))


def enumerate_points(
    lat: Lattice2, radius_gauge: float, e: Exponent
) -> list[tuple[float, float]]:
    """All nonzero lattice points with gauge <= radius_gauge.

    The coefficient box comes from mapping the bounding square of the gauge
    ball through the inverse basis (ceiling plus margin 1), so the listing
    is complete and duplicate-free.  A hair of relative slack on the radius
    keeps points that sit on the boundary in the listing.  Raises
    RuntimeError when a near-degenerate basis would blow the box up.
    """
    if not radius_gauge > 0.0:
        raise ValueError(f"radius_gauge must be positive, got {radius_gauge!r}")
    det = lat.a[0] * lat.b[1] - lat.a[1] * lat.b[0]
    half = radius_gauge ** (1.0 / e.p) if e.is_finite else radius_gauge
    m_raw = (abs(lat.b[0]) + abs(lat.b[1])) * half / abs(det)
    n_raw = (abs(lat.a[0]) + abs(lat.a[1])) * half / abs(det)
    if m_raw > _BOX_LIMIT or n_raw > _BOX_LIMIT or (2 * m_raw + 1) * (2 * n_raw + 1) > _BOX_LIMIT:
        raise RuntimeError(
            "enumeration box overflow (near-degenerate basis?): "
            f"|m| <= {m_raw:.3g}, |n| <= {n_raw:.3g} at radius {radius_gauge!r}"
        )
    m_max = math.ceil(m_raw) + 1
    n_max = math.ceil(n_raw) + 1
    cutoff = radius_gauge * (1.0 + _RADIUS_SLACK)
    ax, ay = lat.a
    bx, by = lat.b
    points = []
    for m in range(-m_max, m_max + 1):
        for n in range(-n_max, n_max + 1):
            if m == 0 and n == 0:
                continue
            v = (m * ax + n * bx, m * ay + n * by)
            if gauge(e, v) <= cutoff:
                points.append(v)
    return points


def min_gauge(lat: Lattice2, e: Exponent) -> float:
    """Gauge of the shortest nonzero lattice vector.

    Grows the enumeration radius geometrically until points appear; any
    point inside radius r certifies that the minimum lies inside r, so the
    first nonempty listing already contains the optimum.
    """
    radius = 1.0
    for _ in range(120):
        points = enumerate_points(lat, radius, e)
        if points:
            return min(gauge(e, v) for v in points)
        radius *= 4.0
    raise RuntimeError(f"no lattice point found out to radius {radius!r}")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an admissibility check."""

    admissible: bool
    min_gauge: float
    boundary_pairs: int
    enumerated: int


def is_admissible(lat: Lattice2, ball: Ball) -> VerifyReport:
    """Check that the lattice meets scale * D_p only at the origin.

    admissible means no nonzero point has gauge(v / scale) < 1 minus the
    slack; boundary_pairs counts +-v pairs with |gauge - 1| <= 1e-8 among
    points enumerated out to gauge 1.5.
    """
    unit = lat.scaled(1.0 / ball.scale) if ball.scale != 1.0 else lat
    points = enumerate_points(unit, 1.5, ball.exponent)
    gauges = [gauge(ball.exponent, v) for v in points]
    lowest = min(gauges) if gauges else min_gauge(unit, ball.exponent)
    pairs = sum(1 for g in gauges if abs(g - 1.0) <= BOUNDARY_TOL) // 2
    return VerifyReport(
        admissible=lowest >= 1.0 - ADMISSIBILITY_SLACK,
        min_gauge=lowest,
        boundary_pairs=pairs,
        enumerated=len(points),
    )


def is_packing(lat: Lattice2, e: Exponent) -> bool:
    """True when unit balls centred on the lattice have disjoint interiors.

    Equivalent to the shortest nonzero vector having p-length >= 2 (two
    centres closer than 2 share the midpoint), and, through that, to
    admissibility for the doubled ball.
    """
    shortest = min_gauge(lat, e)
    length = shortest ** (1.0 / e.p) if e.is_finite else shortest
    return length >= 2.0 - ADMISSIBILITY_SLACK


def density(lat: Lattice2, e: Exponent) -> float:
    """Covered fraction of the plane, area / determinant; needs a packing."""
    if not is_packing(lat, e):
        raise NotAPackingError(f"lattice {lat.a!r}, {lat.b!r} does not pack D_{e}")
    return area(e) / determinant(lat)


@dataclass(frozen=True)
class ScanReport:
    """Sampled slice of the determinant surface at fixed p."""

    p: float
    points: tuple[moduli.ModuliPoint, ...]
    argmin_index: int

    @property
    def min_delta(self) -> float:
        return self.points[self.argmin_index].delta

    @property
    def argmin_sigma(self) -> float:
        return self.points[self.argmin_index].sigma

    @property
    def delta_at_unit(self) -> float:
        return self.points[0].delta

    @property
    def delta_at_sigma_p(self) -> float:
        return self.points[-1].delta


def moduli_scan(p: float, n_samples: int) -> ScanReport:
    """Evaluate the determinant surface on n_samples sigma values in
    [1, sigma_p], verifying each sampled lattice is admissible.

    An admissibility failure raises RuntimeError: it would mean the
    parametrization itself is wrong.
    """
    if not (math.isfinite(p) and p > 1.0):
        raise ValueError(f"moduli scan needs a finite p > 1, got {p!r}")
    if n_samples < 3:
        raise ValueError(f"n_samples must be >= 3, got {n_samples!r}")
    s_hi = moduli.sigma_p(p)
    unit_ball = Ball(Exponent(p))
    points = []
    for i in range(n_samples):
        sigma = 1.0 + (s_hi - 1.0) * i / (n_samples - 1)
        point = moduli.delta(p, sigma)
        report = is_admissible(from_moduli(p, point.tau, point.sigma), unit_ball)
        if not report.admissible:
            raise RuntimeError(
                f"moduli lattice at p={p!r}, sigma={sigma!r} failed admissibility "
                f"(min gauge {report.min_gauge!r})"
            )
        points.append(point)
    argmin = min(range(n_samples), key=lambda i: points[i].delta)
    return ScanReport(p=float(p), points=tuple(points), argmin_index=argmin)


def random_packing_lattice(e: Exponent, rng: random.Random) -> Lattice2:
    """Sample a valid packing lattice: a random basis rescaled so its
    shortest vector has p-length exactly 2."""
    while True:
        ax, ay, bx, by = (rng.uniform(-2.0, 2.0) for _ in range(4))
        if 0.5 <= abs(ax * by - ay * bx) <= 8.0:
            break
    lat = Lattice2((ax, ay), (bx, by))
    shortest = min_gauge(lat, e)
    length = shortest ** (1.0 / e.p) if e.is_finite else shortest
    return lat.scaled(2.0 / length)
