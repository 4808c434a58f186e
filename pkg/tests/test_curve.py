from fractions import Fraction

import numpy as np
import pytest

from e5torsion.algebra.field import EPS, EPS_BAR, CycloElement
from e5torsion.algebra.poly import UniPoly
from e5torsion.algebra.ratfunc import RatFunc
from e5torsion.curve.division import compare_with_display, d5, division_poly_5
from e5torsion.curve.eprime import eprime_curve, eprime_double, from_eprime, to_eprime
from e5torsion.curve.weierstrass import (
    INFINITY,
    CurvePoint,
    WeierstrassCurve,
    group_law,
    origin_subgroup,
    tate5,
    tate5_discriminant,
)
from e5torsion.errors import SingularCurveError


def test_tate5_coefficients():
    assert tate5(1).coefficients == (2, 1, 1, 0, 0)
    b = RatFunc.gen("b")
    assert tate5(b).coefficients == (1 + b, b, b, 0, 0)


def test_tate5_discriminant():
    assert tate5_discriminant() == UniPoly((0, 0, 0, 0, 0, 1, -11, -1), "b")


@pytest.mark.parametrize("b", [0, EPS**5, EPS_BAR**5])
def test_singular_curve(b):
    with pytest.raises(SingularCurveError):
        tate5(b)


def test_group_law_on_origin_subgroup():
    E = tate5(Fraction(1, 3))
    P = CurvePoint(Fraction(0), Fraction(0))
    assert group_law(E, P, op="neg") == CurvePoint(0, Fraction(-1, 3))
    assert group_law(E, P, op="double") == CurvePoint(Fraction(-1, 3), Fraction(1, 9))
    assert group_law(E, P, op="scalar", k=5) == INFINITY
    assert group_law(E, P, group_law(E, P, op="neg")) == INFINITY
    assert E.order(P) == 5
    with pytest.raises(ValueError):
        group_law(E, P, op="halve")


def test_origin_subgroup_symbolic():
    b = RatFunc.gen("b")
    E = tate5(b)
    points = origin_subgroup(b)
    assert points[0] == INFINITY
    for Q in points[1:]:
        assert E.is_on_curve(Q)
        assert E.order(Q, bound=5) == 5


def test_double_two_torsion_is_infinity():
    # y² = x³ - x 의 (0, 0) 은 2-torsion
    E = WeierstrassCurve(0, 0, 0, -1, 0)
    assert E.double(CurvePoint(Fraction(0), Fraction(0))) == INFINITY


def test_numeric_tolerance():
    E = tate5(0.5, tol=1e-9)
    P = CurvePoint(1e-12, -1e-12)
    assert E.is_on_curve(P)
    assert E.mul(5, CurvePoint(0.0, 0.0)).is_infinity


def test_division_polynomial():
    assert d5().degree == 10
    assert d5().lc == 1
    assert division_poly_5().lc == 5
    assert compare_with_display() == []


def test_eprime_round_trip():
    b = Fraction(1, 3)
    P = CurvePoint(Fraction(-1, 3), Fraction(1, 9))
    Q = to_eprime(b, P)
    assert eprime_curve(b).is_on_curve(Q)
    assert from_eprime(b, Q) == P


def test_eprime_doubling_matches_group_law():
    b = RatFunc.gen("b")
    E = tate5(b)
    P = origin_subgroup(b)[1]
    X, Yp = to_eprime(b, P)
    X2, Y2p = eprime_double(b, X, Yp)
    assert X2 == -b
    assert E.equal(from_eprime(b, CurvePoint(X2, Y2p)), E.double(P))


def _rational(rng):
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))


def _cyclo(rng):
    return CycloElement(*(_rational(rng) for _ in range(4)))


def _curve_through(points, a1, a3):
    """세 점을 지나도록 a2, a4, a6 을 정한 곡선 (x 좌표는 서로 달라야 함)"""
    a2 = a4 = a6 = 0
    for i, (x, y) in enumerate(points):
        xj, xk = (p.x for j, p in enumerate(points) if j != i)
        v = (y * y + a1 * x * y + a3 * y - x * x * x) / ((x - xj) * (x - xk))
        a2, a4, a6 = a2 + v, a4 - v * (xj + xk), a6 + v * xj * xk
    return WeierstrassCurve(a1, a2, a3, a4, a6)


def _random_triples(draw, count, seed=456):
    rng = np.random.default_rng(seed)
    found = 0
    while found < count:
        points = [CurvePoint(draw(rng), draw(rng)) for _ in range(3)]
        xs = [P.x for P in points]
        if any(not (xs[i] - xs[j]) for i in range(3) for j in range(i + 1, 3)):
            continue
        E = _curve_through(points, draw(rng), draw(rng))
        if not E.discriminant:
            continue
        found += 1
        yield E, points


@pytest.mark.parametrize("draw, count", [(_rational, 12), (_cyclo, 4)])
def test_group_law_axioms(draw, count):
    for E, (P, Q, R) in _random_triples(draw, count):
        assert all(E.is_on_curve(T) for T in (P, Q, R))
        assert E.equal(E.add(P, INFINITY), P) and E.equal(E.add(INFINITY, P), P)
        assert E.add(P, E.neg(P)).is_infinity
        assert E.equal(E.add(P, Q), E.add(Q, P))
        assert E.is_on_curve(E.add(P, Q)) and E.is_on_curve(E.double(R))
        assert E.equal(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R)))
        assert E.equal(E.add(E.double(P), Q), E.add(P, E.add(P, Q)))
