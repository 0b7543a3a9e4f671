"""Critical determinants, critical lattices, and optimal lattice packings
of planar p-balls, with brute-force enumeration oracles for every
closed-form value."""

from .numerics import Bracket, ConvergenceError, NoSignChangeError, find_root, gamma
from .ball import INF, Ball, BallClass, Exponent, area, classify, gauge, lp_length
from .moduli import (
    ModuliPoint,
    delta,
    delta0,
    delta1,
    delta_doubled,
    sigma_p,
    tau_of_sigma,
    tau_p,
)
from .lattice import (
    Lattice2,
    NotAPackingError,
    ScanReport,
    VerifyReport,
    density,
    determinant,
    enumerate_points,
    from_moduli,
    is_admissible,
    is_packing,
    min_gauge,
    moduli_scan,
    random_packing_lattice,
)
from .critical import (
    Branch,
    CriticalResult,
    critical_determinant,
    critical_lattice,
    davis_constant,
    kappa_minkowski,
    kappa_optimal,
    packing_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BallClass",
    "Bracket",
    "Branch",
    "ConvergenceError",
    "CriticalResult",
    "Exponent",
    "INF",
    "Lattice2",
    "ModuliPoint",
    "NoSignChangeError",
    "NotAPackingError",
    "ScanReport",
    "VerifyReport",
    "area",
    "classify",
    "critical_determinant",
    "critical_lattice",
    "davis_constant",
    "delta",
    "delta0",
    "delta1",
    "delta_doubled",
    "density",
    "determinant",
    "enumerate_points",
    "find_root",
    "from_moduli",
    "gamma",
    "gauge",
    "is_admissible",
    "is_packing",
    "kappa_minkowski",
    "kappa_optimal",
    "lp_length",
    "min_gauge",
    "moduli_scan",
    "packing_lattice",
    "random_packing_lattice",
    "sigma_p",
    "tau_of_sigma",
    "tau_p",
]
