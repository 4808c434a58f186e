"""
Watson 풀이 과정의 각 양을 b 의 함수로 적은 닫힌 형태입니다.

파이프라인(quintic.py)이 계산한 값과 여기의 값을 계수 단위로 비교합니다.
모든 값은 Q(α)(b) 의 RatFunc 이며, α = √5 는 Q(ζ₅) 안의 원소입니다.

공통 인수:
    P = -2b - 11 + 5α,  Q = 2b + 11 + 5α,  u⁵ = Q / P
"""

from fractions import Fraction
from functools import lru_cache

from ..algebra.field import ALPHA, qa
from ..algebra.poly import UniPoly
from ..algebra.ratfunc import RatFunc


def bpoly(*coeffs):
    """낮은 차수부터 주어진 계수로 b 의 다항식(RatFunc) 생성"""
    return RatFunc._from_coprime(UniPoly(coeffs, "b"), UniPoly((1,), "b"))


B = bpoly(0, 1)
P = bpoly(qa(-11, 5), -2)
Q = bpoly(qa(11, 5), 2)
# u_k = K_SCALE·A_k·u^k
K_SCALE = qa(Fraction(1, 20), Fraction(-1, 100))


def _c(rational, alpha_part=0):
    return qa(rational, alpha_part)


@lru_cache(maxsize=None)
def g_coefficients():
    """g(X) 의 계수 (X⁰ … X⁴, 최고차 X⁵ 는 1)"""
    a1 = Fraction(1, 20) * _c(-5, 1) * bpoly(_c(-3, -1), _c(-7, 3), -2)
    a2 = ALPHA / 5 * B * bpoly(_c(1, 2), _c(-11, 4), -1)
    a3 = Fraction(1, 10) * _c(-5, 1) * B**2 * bpoly(_c(-9, -2), _c(-6, 1), -1)
    a4 = bpoly(0, 0, 0, 3, 1)
    a5 = bpoly(0, 0, 0, 0, 1)
    return (a5, a4, a3, a2, a1)


@lru_cache(maxsize=None)
def closed_forms():
    """이름 → 닫힌 형태 RatFunc"""
    pq = P * Q
    pq2 = P * Q**2
    forms = {}
    forms["a1"] = g_coefficients()[4]
    forms["C"] = Fraction(1, 4000) * _c(-3, 1) * bpoly(_c(3, 1), 1) * bpoly(_c(3, 1), -4) * pq
    forms["D"] = (
        Fraction(-1, 100000) * _c(-5, 2) * bpoly(_c(4, 4), _c(-41, -19), _c(-27, 11), -8) * pq2
    )
    forms["E"] = (
        Fraction(1, 500000)
        * _c(-7, 3)
        * bpoly(_c(12, 6), _c(-150, -72), _c(505, 229), _c(-135, 47), _c(-60, 6), -6)
        * pq2
    )
    forms["F"] = (
        Fraction(-1, 12500000)
        * _c(-25, 11)
        * bpoly(
            _c(44, 20),
            _c(-794, -360),
            _c(5326, 2400),
            _c(-15405, -6475),
            _c(3790, 2900),
            _c(-707, 115),
            _c(-133, 5),
            -8,
        )
        * pq2
    )
    forms["K"] = Fraction(1, 8000) * _c(-9, 4) * B**2 * bpoly(_c(29, 13), -2) * pq2
    forms["L"] = (
        Fraction(1, 140800000)
        * _c(-35, 16)
        * B**4
        * bpoly(_c(1, 1), -2)
        * bpoly(_c(-19, 13), 22)
        * P**2
        * Q**4
    )
    forms["M"] = (
        Fraction(1, 512000000)
        * _c(-9, 4)
        * B**6
        * bpoly(_c(3, 1), _c(-35, -13), _c(-11, -11), _c(-20, 2), -2)
        * P**3
        * Q**5
    )
    forms["delta"] = Fraction(1, 1024000) * _c(123, -55) * P**4 * Q**8 * B**14
    forms["sqrt_delta"] = Fraction(1, 1600) * ALPHA * (Fraction(1, 2) * _c(1, -1)) ** 5 * P**2 * Q**4 * B**7
    forms["theta"] = Fraction(1, 50) * bpoly(0, -1, 11, 1)
    forms["T"] = Fraction(1, 20000) * _c(5, -1) * B * bpoly(_c(-2, 1), 1) * pq2
    forms["R1"] = Fraction(1, 4000) * _c(3, -1) * B * bpoly(_c(-1, 1), 2) * pq2
    forms["R2"] = Fraction(1, 2000) * _c(-2, 1) * B * bpoly(_c(1, 1), -2) * pq2
    forms["Xp"] = Fraction(1, 2**6 * 5**5) * _c(-5, 2) * bpoly(_c(1, 1), 2) * P**2 * Q**3
    forms["Yw"] = Fraction(1, 2**4 * 5**5) * _c(-5, 2) * bpoly(_c(2, 1), -1) ** 2 * P**2 * Q**2
    forms["Zw"] = Fraction(1, 2000) * _c(3, -1) * bpoly(_c(2, 1), -1) * bpoly(_c(1, 1), 2) * pq
    forms["Xbar"] = (
        Fraction(1, 100000) * _c(-5, 2) * bpoly(_c(2, 1), -1) * bpoly(_c(-1, 1), -2) ** 2 * pq2
    )
    forms["Ybar"] = (
        Fraction(1, 200000) * _c(-5, 2) * bpoly(_c(-1, 1), -2) * bpoly(_c(1, 1), 2) ** 2 * pq2
    )
    forms["Zbar"] = Fraction(1, 4000) * _c(3, -1) * bpoly(_c(-1, 1), -2) * pq2
    forms["u1_fifth"] = Fraction(1, 2**11 * 5**8) * _c(-25, 11) * P**4 * Q**6
    forms["u5"] = Q / P
    forms["c1"] = Fraction(1, 200) * _c(-5, 1) * pq
    forms.update(a_coefficients())
    return forms


@lru_cache(maxsize=None)
def a_coefficients():
    """X = K_SCALE·(A₄u⁴ + A₃u³ + A₂u² + A₁u + A₀) 의 A₀ … A₄"""
    return {
        "A0": bpoly(_c(-3, -1), _c(-7, 3), -2),
        "A1": bpoly(-2, 22, 2),
        "A2": bpoly(_c(-2, -1), 1) * P,
        "A3": Fraction(-1, 2) * bpoly(_c(1, 1), 2) * P,
        "A4": Fraction(-1, 2) * bpoly(_c(-1, 1), -2) * P,
    }


def expanded_root_display():
    """X 의 u 전개식 (u⁰ … u⁴ 계수, K_SCALE 을 곱하기 전)"""
    return (
        bpoly(_c(-3, -1), _c(-7, 3), -2),
        bpoly(-2, 22, 2),
        bpoly(_c(-3, 1), _c(-7, 7), -2),
        bpoly(_c(-7, 3), _c(12, -4), 2),
        bpoly(_c(-18, 8), _c(-12, 6), -2),
    )
