from fractions import Fraction
import math

import pytest

from e5torsion.algebra.field import (
    ALPHA,
    EPS,
    EPS_BAR,
    ETA,
    ONE,
    ZERO,
    ZETA,
    CycloElement,
    cyclo_arith,
    cyclo_inv,
    embed,
    galois,
    norm,
    qa,
)
from e5torsion.errors import PoleError


def test_cyclo_arith():
    assert cyclo_arith(ZETA, ZETA**4, "mul") == 1
    assert cyclo_arith(EPS, EPS_BAR, "mul") == -1
    assert cyclo_arith(ALPHA, ALPHA, "mul") == 5
    assert cyclo_arith(EPS, EPS_BAR, "add") == -1
    with pytest.raises(ValueError):
        cyclo_arith(ONE, ONE, "pow")


def test_constants():
    assert EPS == (ALPHA - 1) / 2
    assert EPS == ZETA + ZETA**4
    assert EPS_BAR == ZETA**2 + ZETA**3
    assert ALPHA * ETA == ZETA - 1
    assert 1 + ZETA + ZETA**2 + ZETA**3 + ZETA**4 == 0
    assert EPS**5 == qa(Fraction(-11, 2), Fraction(5, 2))
    assert qa(3, 1) == 3 + ALPHA


def test_normalized_representation():
    assert CycloElement(Fraction(2, 4)) == Fraction(1, 2)
    assert CycloElement(2, 4, 6, 8).coeffs == (2, 4, 6, 8)
    assert ZETA**4 == CycloElement(-1, -1, -1, -1)
    assert str(ZERO) == "0"
    assert hash(CycloElement(3)) == hash(Fraction(3))


def test_cyclo_inv():
    assert cyclo_inv(ONE) == 1
    assert cyclo_inv(EPS) == -EPS_BAR
    assert cyclo_inv(ZETA) == ZETA**4
    with pytest.raises(PoleError):
        cyclo_inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_galois():
    assert galois(2, ALPHA) == -ALPHA
    assert galois(4, EPS) == EPS
    assert galois(2, EPS) == EPS_BAR
    assert [galois(k, ALPHA) for k in range(1, 5)] == [ALPHA, -ALPHA, -ALPHA, ALPHA]
    with pytest.raises(ValueError):
        galois(5, ALPHA)
    with pytest.raises(ValueError):
        galois(0, ALPHA)


def test_norm():
    assert norm(1 + ZETA) == 1
    assert norm(ZETA) == 1
    assert norm(2) == 16
    assert norm(EPS) == 1


def test_embed():
    assert abs(embed(ALPHA, 1) - math.sqrt(5)) < 1e-12
    assert abs(embed(EPS, 1) - (math.sqrt(5) - 1) / 2) < 1e-12
    assert abs(embed(ALPHA, 2) + math.sqrt(5)) < 1e-12
    for k in range(1, 5):
        assert abs(embed(ONE, k) - 1) < 1e-15
        assert abs(abs(embed(ZETA, k)) - 1) < 1e-15


def test_field_axioms(rng):
    for _ in range(50):
        a, b, c = (CycloElement.random(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_galois_is_homomorphism(rng):
    for _ in range(30):
        a, b = CycloElement.random(rng), CycloElement.random(rng)
        for k in range(1, 5):
            assert galois(k, a * b) == galois(k, a) * galois(k, b)
            assert galois(k, a + b) == galois(k, a) + galois(k, b)
            for m in range(1, 5):
                assert galois(k, galois(m, a)) == galois(k * m % 5, a)
        assert galois(1, a) == a


def test_norm_multiplicative(rng):
    for _ in range(100):
        a, b = CycloElement.random(rng), CycloElement.random(rng)
        assert norm(a * b) == norm(a) * norm(b)


def test_embed_respects_galois(rng):
    for _ in range(30):
        a = CycloElement.random(rng)
        for k in range(1, 5):
            assert embed(galois(k, a), 1) == pytest.approx(embed(a, k), abs=1e-12)
