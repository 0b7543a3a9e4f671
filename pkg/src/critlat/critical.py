"""Top-level constants of the planar p-ball packing problem.

The Davis constant (where the two branch values cross), the critical
determinant with branch selection, the two kappa constants, and the
critical and packing lattice constructors including the exact cases
p = 1, 2 and the max-norm limit.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum

from . import moduli
from .ball import Exponent
from .lattice import Lattice2, from_moduli
from .numerics import Bracket, find_root, gamma

__all__ = [
    "Branch",
    "CriticalResult",
    "critical_determinant",
    "critical_lattice",
    "davis_constant",
    "kappa_minkowski",
    "kappa_optimal",
    "packing_lattice",
]

_DAVIS_LO = 2.57
_DAVIS_HI = 2.58
_BRANCH_AGREE_TOL = 1e-10


class Branch(Enum):
    """Which construction realizes the critical determinant."""

    BRANCH0 = "branch0"  # sigma = sigma_p endpoint of the moduli surface
    BRANCH1 = "branch1"  # sigma = 1 endpoint
    EXACT = "exact"      # closed-form limiting case (p = 1 or the max-norm ball)


def _exact_unit_lattice() -> Lattice2:
    return Lattice2((0.5, 0.5), (0.0, 1.0))


def _exact_maxnorm_lattice() -> Lattice2:
    return Lattice2((1.0, 1.0), (0.0, 1.0))


@functools.cache
def davis_constant() -> float:
    """The p in (2.57, 2.58) where the two branch values cross.

    Computed once per process and cached (the cache is what every
    classification call reads, so they all agree).  If the branch
    difference failed to change sign over the interval the crossing
    would not exist there; that state aborts loudly.
    """

    def diff(p: float) -> float:
        return moduli.delta0(p) - moduli.delta1(p)

    f_lo, f_hi = diff(_DAVIS_LO), diff(_DAVIS_HI)
    if f_lo == 0.0 or f_hi == 0.0 or (f_lo > 0.0) == (f_hi > 0.0):
        raise RuntimeError(
            "branch difference does not change sign on "
            f"[{_DAVIS_LO}, {_DAVIS_HI}]: diff(lo)={f_lo!r}, diff(hi)={f_hi!r}"
        )
    return find_root(diff, Bracket(_DAVIS_LO, _DAVIS_HI, f_lo, f_hi), tol=1e-12)


@dataclass(frozen=True)
class CriticalResult:
    """Critical determinant of a ball together with how it is attained."""

    p: Exponent
    delta: float
    branch: Branch
    kappa: float
    lattice: Lattice2
    both_branches: bool = False


def critical_determinant(e: Exponent) -> CriticalResult:
    """Critical determinant of D_p with the branch attaining it.

    The sigma = 1 branch applies for 1 < p <= 2 and p >= p0, the
    sigma = sigma_p branch for 2 <= p <= p0; p = 1 and the max-norm limit
    have exact values 1/2 and 1.  At the overlap points p = 2 and p = p0
    both branches agree (asserted via both_branches) and the sigma_p
    branch is reported.
    """
    if not e.is_finite:
        return CriticalResult(
            p=e, delta=1.0, branch=Branch.EXACT, kappa=1.0,
            lattice=_exact_maxnorm_lattice(),
        )
    p = e.p
    if p == 1.0:
        return CriticalResult(
            p=e, delta=0.5, branch=Branch.EXACT, kappa=math.sqrt(2.0),
            lattice=_exact_unit_lattice(),
        )
    p0 = davis_constant()
    d0 = moduli.delta0(p)
    d1 = moduli.delta1(p)
    agree = abs(d0 - d1) <= _BRANCH_AGREE_TOL
    if 2.0 <= p <= p0:
        branch, value = Branch.BRANCH0, d0
        lattice = from_moduli(p, 0.0, moduli.sigma_p(p))
    else:
        branch, value = Branch.BRANCH1, d1
        lattice = from_moduli(p, moduli.tau_p(p), 1.0)
    return CriticalResult(
        p=e, delta=value, branch=branch, kappa=value ** (-p / 2.0),
        lattice=lattice, both_branches=agree,
    )


def kappa_optimal(p: float) -> float:
    """The non-improvable constant: Delta(D_p)^(-p/2)."""
    if not (math.isfinite(p) and p >= 1.0):
        raise ValueError(f"kappa_optimal needs a finite p >= 1, got {p!r}")
    return critical_determinant(Exponent(p)).kappa


def kappa_minkowski(p: float) -> float:
    """The convex-body sufficient constant: Gamma(1 + 2/p)^(1/2) / Gamma(1 + 1/p)."""
    if not (math.isfinite(p) and p >= 1.0):
        raise ValueError(f"kappa_minkowski needs a finite p >= 1, got {p!r}")
    return math.sqrt(gamma(1.0 + 2.0 / p)) / gamma(1.0 + 1.0 / p)


def critical_lattice(e: Exponent, branch: Branch | None = None) -> Lattice2:
    """Basis of a critical lattice; branch defaults to the one attaining
    the critical determinant.

    For finite p > 1 both endpoint lattices exist: BRANCH0 has first
    generator exactly (1, 0); BRANCH1 has second generator exactly
    (-2^(-1/p), 2^(-1/p)).  The exact p = 1 and max-norm lattices belong
    to the sigma = 1 family, so BRANCH0 is invalid there.
    """
    if not e.is_finite or e.p == 1.0:
        if branch not in (None, Branch.BRANCH1, Branch.EXACT):
            raise ValueError(f"only the sigma = 1 family exists at p = {e}, not {branch}")
        return _exact_unit_lattice() if e.is_finite else _exact_maxnorm_lattice()
    if branch is None:
        return critical_determinant(e).lattice
    if branch is Branch.BRANCH0:
        return from_moduli(e.p, 0.0, moduli.sigma_p(e.p))
    if branch is Branch.BRANCH1:
        return from_moduli(e.p, moduli.tau_p(e.p), 1.0)
    raise ValueError(f"no lattice construction for branch {branch!r} at p = {e}")


def packing_lattice(e: Exponent) -> Lattice2:
    """The optimal packing lattice: the active critical lattice scaled by 2.

    Its determinant is 4 Delta(D_p), and balls of p-radius 1 centred on it
    touch without overlapping.
    """
    return critical_lattice(e).scaled(2.0)
