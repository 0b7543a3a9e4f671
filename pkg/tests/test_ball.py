import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from critlat.ball import INF, Ball, BallClass, Exponent, area, classify, gauge, lp_length

P0_NOMINAL = 2.5725


def boundary_point(e, direction, radius=1.0):
    """Scale a direction vector onto the boundary of radius * D_p."""
    length = lp_length(e, direction)
    return (radius * direction[0] / length, radius * direction[1] / length)


class TestExponent:
    @pytest.mark.parametrize("bad", [0.5, 0.999, -2.0, math.nan])
    def test_rejects_bad_p(self, bad):
        with pytest.raises(ValueError):
            Exponent(bad)

    def test_infinity_is_symbolic(self):
        assert not INF.is_finite
        assert str(INF) == "inf"
        with pytest.raises(ValueError):
            Exponent.finite(math.inf)

    @pytest.mark.parametrize(
        "text,expected",
        [("2", Exponent(2.0)), ("1.5", Exponent(1.5)), ("inf", INF),
         ("INFINITY", INF), (" oo ", INF)],
    )
    def test_parse(self, text, expected):
        assert Exponent.parse(text) == expected

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            Exponent.parse("two")


class TestGauge:
    def test_boundary_points(self):
        assert gauge(Exponent(2.0), (1.0, 0.0)) == 1.0
        assert gauge(Exponent(1.0), (0.5, 0.5)) == 1.0
        assert gauge(INF, (0.3, -0.9)) == 0.9

    @given(
        x=st.floats(-10, 10), y=st.floats(-10, 10),
        p=st.floats(min_value=1.0, max_value=40.0),
    )
    def test_central_symmetry(self, x, y, p):
        for e in (Exponent(p), INF):
            assert gauge(e, (-x, -y)) == gauge(e, (x, y))

    def test_convexity_probe(self):
        rng = random.Random(20240217)
        for e in [Exponent(p) for p in (1.0, 1.3, 2.0, 2.7, 5.0, 30.0)] + [INF]:
            for _ in range(200):
                u = boundary_point(e, (rng.uniform(-1, 1), rng.uniform(-1, 1)))
                v = boundary_point(e, (rng.uniform(-1, 1), rng.uniform(-1, 1)))
                t = rng.uniform(0.0, 1.0)
                mix = (t * u[0] + (1 - t) * v[0], t * u[1] + (1 - t) * v[1])
                assert gauge(e, mix) <= 1.0 + 1e-12

    def test_length_consistency(self):
        e = Exponent(3.0)
        v = (0.4, -1.7)
        assert abs(lp_length(e, v) ** e.p - gauge(e, v)) <= 1e-12 * gauge(e, v)

    def test_length_no_overflow_large_p(self):
        # the factored form must survive |x|^p blowing past double range
        assert math.isfinite(lp_length(Exponent(200.0), (3e100, 4e100)))


class TestBall:
    def test_scale_validation(self):
        with pytest.raises(ValueError):
            Ball(Exponent(2.0), 0.0)
        with pytest.raises(ValueError):
            Ball(Exponent(2.0), -1.0)

    def test_closed_membership(self):
        ball = Ball(Exponent(2.0))
        assert ball.contains((1.0, 0.0))
        assert not ball.contains((1.0 + 1e-9, 0.0))

    def test_scaled_membership(self):
        ball = Ball(Exponent(2.0), scale=2.0)
        assert ball.contains((2.0, 0.0))
        assert not ball.contains((2.0001, 0.0))

    def test_strict_interior(self):
        ball = Ball(Exponent(2.0))
        assert not ball.strictly_inside((1.0, 0.0))
        assert not ball.strictly_inside((1.0 - 1e-12, 0.0))
        assert ball.strictly_inside((0.9, 0.0))
        assert ball.strictly_inside((1.0 - 1e-12, 0.0), tol=1e-13)


class TestArea:
    def test_classical_values(self):
        assert abs(area(Exponent(2.0)) - math.pi) <= 1e-12 * math.pi
        assert area(Exponent(1.0)) == 2.0
        assert area(INF) == 4.0

    def test_against_stdlib_gamma(self):
        p = 1.05
        while p < 50.0:
            ref = 4.0 * math.gamma(1 + 1 / p) ** 2 / math.gamma(1 + 2 / p)
            assert abs(area(Exponent(p)) - ref) <= 1e-12 * ref
            p += 0.31

    def test_continuity_and_limit(self):
        p = 1.0
        while p < 20.0:
            step = abs(area(Exponent(p + 1e-7)) - area(Exponent(p)))
            assert step <= 1e-5
            p += 0.5
        assert area(Exponent(200.0)) > 3.95
        assert area(Exponent(200.0)) < 4.0


class TestClassify:
    @pytest.mark.parametrize(
        "p,expected",
        [
            (1.0, BallClass.LIMITING_MINKOWSKI),
            (1.5, BallClass.MINKOWSKI),
            (1.999999, BallClass.MINKOWSKI),
            (2.0, BallClass.DAVIS),
            (2.5, BallClass.DAVIS),
            (P0_NOMINAL, BallClass.CHEBYSHEV_COHN),
            (3.0, BallClass.CHEBYSHEV_COHN),
            (100.0, BallClass.CHEBYSHEV_COHN),
        ],
    )
    def test_partition(self, p, expected):
        assert classify(Exponent(p), P0_NOMINAL) is expected

    def test_limit(self):
        assert classify(INF, P0_NOMINAL) is BallClass.LIMITING_CHEBYSHEV

    def test_every_exponent_classified(self):
        p = 1.0
        while p < 8.0:
            assert isinstance(classify(Exponent(p), P0_NOMINAL), BallClass)
            p += 0.01

    @pytest.mark.parametrize("bad", [2.5, 2.6, 0.0])
    def test_p0_must_be_in_enclosure(self, bad):
        with pytest.raises(ValueError):
            classify(Exponent(2.0), bad)
