import math

import pytest

from critlat.ball import INF, Ball, Exponent, area
from critlat.critical import (
    Branch,
    critical_determinant,
    critical_lattice,
    davis_constant,
    kappa_minkowski,
    kappa_optimal,
    packing_lattice,
)
from critlat.lattice import determinant, density, is_admissible
from critlat.moduli import delta0, delta1

SQRT3 = math.sqrt(3.0)


def grid(lo, hi, n):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


class TestDavisConstant:
    def test_enclosure(self):
        p0 = davis_constant()
        assert 2.57 < p0 < 2.58
        assert abs(p0 - 2.5725) <= 5e-4

    def test_bracket_sign_change(self):
        lo = delta0(2.57) - delta1(2.57)
        hi = delta0(2.58) - delta1(2.58)
        assert (lo > 0.0) != (hi > 0.0)

    def test_branches_cross(self):
        p0 = davis_constant()
        assert abs(delta0(p0) - delta1(p0)) <= 1e-10

    def test_deterministic_and_cached(self):
        davis_constant.cache_clear()
        first = davis_constant()
        assert davis_constant() == first
        davis_constant.cache_clear()
        assert davis_constant() == first


class TestCriticalDeterminant:
    def test_exact_values(self):
        assert abs(critical_determinant(Exponent(2.0)).delta - SQRT3 / 2.0) <= 1e-12
        assert critical_determinant(Exponent(1.0)).delta == 0.5
        assert critical_determinant(INF).delta == 1.0

    def test_branch_selection(self):
        p0 = davis_constant()
        assert critical_determinant(Exponent(1.5)).branch is Branch.BRANCH1
        assert critical_determinant(Exponent(2.0)).branch is Branch.BRANCH0
        assert critical_determinant(Exponent(2.3)).branch is Branch.BRANCH0
        assert critical_determinant(Exponent(p0)).branch is Branch.BRANCH0
        assert critical_determinant(Exponent(3.0)).branch is Branch.BRANCH1
        assert critical_determinant(Exponent(1.0)).branch is Branch.EXACT
        assert critical_determinant(INF).branch is Branch.EXACT

    def test_both_branches_flag_at_overlaps(self):
        assert critical_determinant(Exponent(2.0)).both_branches
        assert critical_determinant(Exponent(davis_constant())).both_branches
        assert not critical_determinant(Exponent(1.7)).both_branches
        assert not critical_determinant(Exponent(4.0)).both_branches

    def test_continuity_at_branch_switches(self):
        for crossing in (2.0, davis_constant()):
            left = critical_determinant(Exponent(crossing - 1e-9)).delta
            right = critical_determinant(Exponent(crossing + 1e-9)).delta
            assert abs(left - right) <= 1e-9

    def test_lattice_determinant_matches_delta(self):
        for p in grid(1.01, 6.0, 40):
            res = critical_determinant(Exponent(p))
            assert abs(determinant(res.lattice) - res.delta) <= 1e-10

    def test_kappa_field(self):
        for p in (1.5, 2.0, 3.5):
            res = critical_determinant(Exponent(p))
            assert res.kappa == res.delta ** (-p / 2.0)


class TestKappa:
    def test_optimal_values(self):
        assert abs(kappa_optimal(2.0) - 2.0 / SQRT3) <= 1e-12
        assert abs(kappa_optimal(1.0) - math.sqrt(2.0)) <= 1e-15

    def test_minkowski_values(self):
        assert abs(kappa_minkowski(2.0) - 2.0 / math.sqrt(math.pi)) <= 1e-13
        assert abs(kappa_minkowski(1.0) - math.sqrt(2.0)) <= 1e-13

    def test_positive_and_finite_on_grid(self):
        for p in grid(1.0, 8.0, 60):
            for value in (kappa_optimal(p), kappa_minkowski(p)):
                assert math.isfinite(value) and value > 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            kappa_optimal(math.inf)
        with pytest.raises(ValueError):
            kappa_minkowski(0.5)

    def test_convex_body_bound(self):
        # the optimal constant always beats the sufficient one, stated as
        # Delta(D_p) >= area/4 with equality only at the limiting squares
        for p in grid(1.01, 6.0, 60):
            e = Exponent(p)
            assert critical_determinant(e).delta >= area(e) / 4.0 - 1e-12
        assert critical_determinant(Exponent(1.0)).delta == area(Exponent(1.0)) / 4.0
        assert critical_determinant(INF).delta == area(INF) / 4.0


class TestCriticalLattice:
    def test_hexagonal_at_p2(self):
        lat = critical_lattice(Exponent(2.0), Branch.BRANCH0)
        assert lat.a == (1.0, 0.0)
        assert abs(lat.b[0] + 0.5) <= 1e-15
        assert abs(lat.b[1] - SQRT3 / 2.0) <= 1e-15
        assert abs(determinant(lat) - SQRT3 / 2.0) <= 1e-15
        # same point set as its mirrored printed form
        mirrored = {(0.5, SQRT3 / 2.0), (-0.5, -SQRT3 / 2.0)}
        combos = {
            (m * lat.a[0] + n * lat.b[0], m * lat.a[1] + n * lat.b[1])
            for m in (-1, 0, 1)
            for n in (-1, 0, 1)
        }
        assert all(
            any(abs(c[0] - t[0]) <= 1e-15 and abs(c[1] - t[1]) <= 1e-15 for c in combos)
            for t in mirrored
        )

    def test_exact_cases(self):
        lat1 = critical_lattice(Exponent(1.0))
        assert lat1.a == (0.5, 0.5) and lat1.b == (0.0, 1.0)
        lat_inf = critical_lattice(INF)
        assert lat_inf.a == (1.0, 1.0) and lat_inf.b == (0.0, 1.0)

    @pytest.mark.parametrize("p", [1.3, 2.0, 2.8, 5.0])
    def test_unit_branch_generator(self, p):
        lat = critical_lattice(Exponent(p), Branch.BRANCH1)
        want = 2.0 ** (-1.0 / p)
        assert abs(lat.b[0] + want) <= 1e-14
        assert abs(lat.b[1] - want) <= 1e-14

    def test_default_branch_follows_selection(self):
        res = critical_determinant(Exponent(2.3))
        assert critical_lattice(Exponent(2.3)) == res.lattice

    def test_invalid_branch_for_exact_cases(self):
        with pytest.raises(ValueError):
            critical_lattice(Exponent(1.0), Branch.BRANCH0)
        with pytest.raises(ValueError):
            critical_lattice(INF, Branch.BRANCH0)

    def test_admissible_on_grid(self):
        for p in grid(1.01, 6.0, 30):
            e = Exponent(p)
            report = is_admissible(critical_lattice(e), Ball(e))
            assert report.admissible, f"p={p}"
            assert report.boundary_pairs == 3, f"p={p}"


class TestPackingLattice:
    def test_determinants(self):
        assert abs(determinant(packing_lattice(Exponent(2.0))) - 2.0 * SQRT3) <= 1e-12
        assert determinant(packing_lattice(Exponent(1.0))) == 2.0
        assert determinant(packing_lattice(INF)) == 4.0

    def test_densities(self):
        assert density(packing_lattice(Exponent(1.0)), Exponent(1.0)) == 1.0
        assert density(packing_lattice(INF), INF) == 1.0
        got = density(packing_lattice(Exponent(2.0)), Exponent(2.0))
        assert abs(got - math.pi / (2.0 * SQRT3)) <= 1e-12

    def test_determinant_is_four_delta(self):
        for p in grid(1.01, 6.0, 40):
            e = Exponent(p)
            res = critical_determinant(e)
            assert abs(determinant(packing_lattice(e)) - 4.0 * res.delta) <= 1e-12
