from fractions import Fraction

import pytest

from e5torsion.algebra.field import EPS, EPS_BAR, ZETA, CycloElement
from e5torsion.algebra.poly import UniPoly, poly_arith
from e5torsion.algebra.ratfunc import RatFunc, coeff_galois, rf_arith, rf_eval, substitute
from e5torsion.algebra.serialize import cyclo_to_str, parse_cyclo, parse_exact, parse_ratfunc, ratfunc_to_str
from e5torsion.errors import (
    DegenerateSubstitutionError,
    ExactDivisionError,
    PoleError,
    VariableMismatchError,
)


u = RatFunc.gen("u")


def upoly(*coeffs):
    return UniPoly(coeffs, "u")


def random_ratfunc(rng):
    num = UniPoly([CycloElement.random(rng) for _ in range(3)], "u")
    den = UniPoly([CycloElement.random(rng), CycloElement(1) + CycloElement.random(rng) ** 2], "u")
    if not den:
        den = upoly(1, 1)
    return RatFunc(num, den)


def test_poly_arith():
    assert poly_arith(upoly(-1, 0, 1), upoly(-1, 1), "gcd") == upoly(-1, 1)
    assert poly_arith(upoly(1, 1), upoly(-1, 1), "mul") == upoly(-1, 0, 1)
    q, r = poly_arith(upoly(1, 0, 0, 0, 0, 1), upoly(1, 1), "divrem")
    assert q == upoly(1, -1, 1, -1, 1)
    assert r.is_zero()


def test_poly_errors():
    with pytest.raises(PoleError):
        divmod(upoly(1, 1), upoly())
    with pytest.raises(VariableMismatchError):
        upoly(0, 1) + UniPoly((0, 1), "b")
    with pytest.raises(ExactDivisionError):
        upoly(1, 0, 1).exact_div(upoly(-1, 1))


def test_gcd_is_monic():
    g = upoly(2, 2).gcd(upoly(-2, 0, 2))
    assert g == upoly(1, 1)
    assert g.lc == 1


def test_rf_arith():
    assert rf_arith(1 / (u + 1), 1 / (u - 1), "add") == 2 * u / (u**2 - 1)
    assert rf_arith((u - 1) / (u + 1), (u + 1) / (u - 1), "mul") == 1
    assert rf_arith(u, u, "sub") == 0
    with pytest.raises(PoleError):
        rf_arith(u, u * 0, "div")


def test_canonical_form(rng):
    f = (2 * u) / (4 * u + 2)
    assert f.den.lc == 1
    assert f == u / (2 * u + 1)
    for _ in range(10):
        g = random_ratfunc(rng)
        if g:
            assert g / g == 1
        assert g.num.gcd(g.den) == 1


def test_substitute():
    b = (u - EPS) / (u - EPS_BAR)
    assert substitute(u**5, "invert") == 1 / u**5
    assert substitute(b, "invert") == (1 - EPS * u) / (1 - EPS_BAR * u)
    assert substitute(u**2, "scale-root", 1) == ZETA**2 * u**2
    assert substitute(u, "compose", u**2 + 1) == u**2 + 1
    assert substitute(u, "moebius", 1, 2, 3, 4) == (u + 2) / (3 * u + 4)
    with pytest.raises(DegenerateSubstitutionError):
        substitute(u, "moebius", 1, 2, 2, 4)


def test_b_of_u_is_twist_invariant(tf):
    assert tf.b_of_u.twist(1) == tf.b_of_u
    assert tf.b_of_u.twist(3) == tf.b_of_u


def test_substitution_properties(rng):
    for _ in range(5):
        f = random_ratfunc(rng)
        assert f.invert().invert() == f
        g = f
        for _ in range(5):
            g = g.twist(1)
        assert g == f


def test_moebius_composition_is_sound(rng):
    f = u**5
    for _ in range(10):
        a, b, c, d = (CycloElement.random(rng) for _ in range(4))
        x = CycloElement.random(rng)
        if a * d == b * c or not (c * x + d):
            continue
        assert f.moebius(a, b, c, d).evaluate(x) == f.evaluate((a * x + b) / (c * x + d))


def test_coeff_galois(rng):
    assert coeff_galois(4, u - ZETA) == u - ZETA**4
    for _ in range(5):
        f, g = random_ratfunc(rng), random_ratfunc(rng)
        assert coeff_galois(2, coeff_galois(3, f)) == f
        assert coeff_galois(2, f * g) == coeff_galois(2, f) * coeff_galois(2, g)
        assert coeff_galois(2, f + g) == coeff_galois(2, f) + coeff_galois(2, g)


def test_rf_eval(tf):
    assert rf_eval(tf.b_of_u, 1) == Fraction(-11, 2)
    assert rf_eval(tf.b_of_u, 0) == EPS_BAR**5
    assert rf_eval(tf.X_of_u, 0)
    with pytest.raises(PoleError):
        rf_eval(tf.X_of_u, -1)
    with pytest.raises(PoleError):
        rf_eval(1 / (u - 2), 2)


def test_variable_mismatch():
    with pytest.raises(VariableMismatchError):
        u + RatFunc.gen("b")


def test_serialize(tf):
    assert cyclo_to_str(EPS) == "(-1, 0, -1, -1)"
    assert parse_cyclo("(1/2, 0, -3, 1)") == CycloElement(Fraction(1, 2), 0, -3, 1)
    assert parse_exact("-11/2") == Fraction(-11, 2)
    assert parse_exact(cyclo_to_str(EPS_BAR)) == EPS_BAR
    assert parse_ratfunc(ratfunc_to_str(tf.X_of_u), "u") == tf.X_of_u
    with pytest.raises(ValueError):
        parse_exact("abc")


def test_algebra_exports():
    import e5torsion.algebra as algebra

    assert {"RatFunc", "UniPoly", "Factored", "substitute", "rf_zero"} <= set(dir(algebra))
    assert not hasattr(algebra, "linear")
    assert not hasattr(UniPoly, "monomial") and not hasattr(UniPoly, "from_roots")
    assert not hasattr(algebra.Factored, "degrees")
