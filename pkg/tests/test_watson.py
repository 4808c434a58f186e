import pytest

from e5torsion.algebra.field import qa
from e5torsion.algebra.poly import UniPoly
from e5torsion.algebra.ratfunc import RatFunc
from e5torsion.errors import DegenerateResolventError
from e5torsion.watson.closed_forms import K_SCALE, a_coefficients, bpoly, closed_forms, expanded_root_display
from e5torsion.watson.quintic import (
    RF_ZERO,
    build_g,
    compare_with_closed_forms,
    depress,
    depressed_quintic,
    eisenstein_check,
    expanded_display_mismatches,
    factorization_check,
    h_at_theta,
    lagrange_resolvent,
    phi_of_b,
    radical_data,
    root_identity,
    run_pipeline,
)


u = RatFunc.gen("u")
B_POLY = UniPoly((0, 1), "b")


def test_build_g():
    g = build_g(1)
    assert g.degree == 5
    assert g.lc == 1
    assert build_g(-1) == g.conjugate(2)
    with pytest.raises(ValueError):
        build_g(2)


def test_factorization():
    assert factorization_check()


def test_depress():
    f, C, D, E, F = depress(build_g(1))
    assert not f.coeff(4)
    assert f.coeff(3) == 10 * C
    assert f.coeff(0) == F
    assert depressed_quintic() == f


def test_closed_forms():
    report = compare_with_closed_forms()
    assert {name: diff for name, diff in report.items() if diff is not None} == {}


def test_sqrt_delta_and_theta():
    data = run_pipeline()
    assert data.sqrt_delta**2 == data.delta
    assert not h_at_theta()


def test_radicals():
    d = run_pipeline()
    assert d.R1**2 == (d.D - d.T) ** 2 + 4 * (d.C - d.theta) ** 2 * (d.C + d.theta)
    assert d.u5 == phi_of_b()
    assert d.u1_fifth == d.c1**5 * d.u5


def test_degenerate_resolvent():
    d = run_pipeline()
    with pytest.raises(DegenerateResolventError):
        radical_data(d.C, d.D, d.E, RF_ZERO, d.T)
    with pytest.raises(DegenerateResolventError):
        radical_data(d.C, d.D, d.E, d.C, d.T)


@pytest.mark.parametrize("alpha_sign", [1, -1])
def test_root_identity(alpha_sign):
    assert all(not c for c in root_identity(alpha_sign))


def test_eisenstein_examples():
    b = B_POLY
    assert eisenstein_check(UniPoly((b, b, 1), "x", UniPoly((), "b")), b)
    assert not eisenstein_check(UniPoly((b * b, b, 1), "x", UniPoly((), "b")), b)
    assert not eisenstein_check(UniPoly((b, b + 1, 1), "x", UniPoly((), "b")), b)


def test_eisenstein_depressed_quintic():
    assert eisenstein_check(depressed_quintic(), UniPoly((qa(-11, 5), -2), "b"))


def test_kummer_element(tf):
    assert phi_of_b().compose(tf.b_of_u) == u**5
    coeffs = a_coefficients()
    assert coeffs["A1"]
    for k in range(5):
        want = K_SCALE * coeffs[f"A{k}"].compose(tf.b_of_u) * u**k
        assert lagrange_resolvent(tf.X_of_u, k) == want


def test_closed_form_names():
    forms = closed_forms()
    for name in ("a1", "C", "D", "E", "F", "K", "L", "M", "delta", "sqrt_delta", "theta", "T", "R1", "R2"):
        assert name in forms
    for k in range(5):
        assert f"A{k}" in forms


def test_expanded_display():
    assert expanded_display_mismatches() == []
    shown = expanded_root_display()
    assert [a_coefficients()[f"A{k}"] for k in range(5)] == list(shown)
    # A₂ = (-2-α+b)(-11+5α-2b) 의 전개
    assert shown[2] == bpoly(qa(-2, -1), 1) * bpoly(qa(-11, 5), -2)
