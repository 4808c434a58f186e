from fractions import Fraction

import pytest

from e5torsion.algebra.field import ZETA, CycloElement
from e5torsion.algebra.ratfunc import RatFunc
from e5torsion.errors import PoleError, SingularCurveError
from e5torsion.torsion import checks
from e5torsion.torsion.formulas import sigma
from e5torsion.torsion.points import (
    PointLabel,
    all_labels,
    exact_points,
    numeric_points,
    phi_numeric,
    point,
    pole_set,
    sigma_label,
    x_functions,
)


u = RatFunc.gen("u")


@pytest.mark.parametrize(
    "check",
    [
        checks.b_factorization_check,
        checks.x_forms_check,
        checks.curve_membership_check,
        checks.vieta_check,
        checks.discriminant_check,
        checks.lemma_check,
        checks.scalar_identity_check,
        checks.unit_check,
        checks.census_check,
        checks.d5_root_check,
        checks.pole_disjointness_check,
    ],
)
def test_exact_checks(check):
    ok, detail = check()
    assert ok, detail


def test_order5():
    entries = checks.verify_order5()
    assert [i for i, ok, _ in entries if not ok] == []


def test_doubling_is_sigma():
    entries = checks.verify_doubling()
    assert [i for i, ok, _ in entries if not ok] == []


def test_sigma_is_involution_up_to_galois(tf):
    # σ⁴ = (ζ ↦ ζ¹⁶ = ζ, u ↦ u)
    f = tf.X_of_u
    assert sigma(sigma(sigma(sigma(f)))) == f
    assert sigma(u) == 1 / u


def test_point_labels():
    assert PointLabel(7).i == 2
    assert str(PointLabel(1, "conjugate", "Y2")) == "conjugate[1]/Y2"
    assert len(all_labels()) == 20
    assert len(set(all_labels())) == 20
    with pytest.raises(ValueError):
        PointLabel(0, "other")
    with pytest.raises(ValueError):
        PointLabel(0, "principal", "Y3")


def test_points_are_twists(tf):
    X, Y = point(PointLabel(2))
    assert X == tf.X_of_u.twist(-2)
    assert Y == tf.Y1_of_u.twist(-2)
    assert len(set(x_functions())) == 10


def test_pole_sets():
    # X = …/((u+ζ²)(u+ζ³)(u+1)²)
    assert pole_set(point(PointLabel(0))[0]) == frozenset({0, 2, 3})


def test_exact_points_at_one():
    b, points = exact_points(1)
    assert b == Fraction(-11, 2)
    assert len(points) == 20
    assert len({P for _, P in points}) == 20


def test_exact_points_pole():
    with pytest.raises(PoleError, match=r"u \+ ζ\^0"):
        exact_points(-1)
    with pytest.raises(PoleError):
        exact_points(-ZETA)


def test_exact_points_singular():
    # b(0) = ε̄⁵ 은 b² + 11b - 1 의 근
    with pytest.raises(SingularCurveError):
        exact_points(0)


def test_numeric_points():
    u_value, points = numeric_points(1.0)
    assert u_value**5 == pytest.approx(phi_numeric(1.0), rel=1e-12)
    assert len(points) == 20


@pytest.mark.parametrize("b", [0.0, 0.0901699437494742])
def test_numeric_points_singular(b):
    # 0.0901699… = (-11 + 5√5)/2
    with pytest.raises(SingularCurveError):
        numeric_points(b)


def test_sigma_swaps_branches():
    images = {label: sigma_label(label) for label in all_labels()}
    assert None not in images.values()
    assert set(images.values()) == set(all_labels())
    for label, image in images.items():
        assert image.branch != label.branch
    # σ(principal[0]/Y1) 은 σ 로 만든 conjugate[0]/Y1 그 자체
    assert images[PointLabel(0)] == PointLabel(0, "conjugate")


@pytest.mark.parametrize(
    "b",
    [
        Fraction(1, 3),
        Fraction(1, 1000),
        CycloElement(Fraction(-11, 2), Fraction(5, 2), Fraction(5, 2), Fraction(5, 2)),
        100,
        10**5,
        -(10**4),
        1e5,
    ],
)
def test_numeric_points_wide_range(b):
    u_value, points = numeric_points(b)
    b_value = complex(b.embed(1)) if isinstance(b, CycloElement) else complex(b)
    assert len(points) == 20
    assert abs(u_value**5 - phi_numeric(b_value)) <= 1e-8 * abs(u_value**5)


@pytest.mark.parametrize("u0", [2, Fraction(1, 2), 10])
def test_numeric_points_match_exact(u0):
    b, exact = exact_points(u0)
    u_value, points = numeric_points(b)
    assert u_value == pytest.approx(float(u0), rel=1e-12)
    for (label, Q), (other, P) in zip(exact, points):
        assert label == other
        assert P.x == pytest.approx(complex(Q.x.embed(1)), rel=1e-9, abs=1e-12)
        assert P.y == pytest.approx(complex(Q.y.embed(1)), rel=1e-9, abs=1e-12)
