"""
5-분할다항식 모듈입니다.

## 주요 기능
- psi5_xpart(curve): ψ₂² 를 소거한 x-다항식 형태의 ψ₅
- division_poly_5(): E₅(b) 의 ψ₅ 를 x(x+b) 로 나눈 D₅(x) (최고차항 5x¹⁰)
- d5(): D₅ / 5 (모닉)
- D5_DISPLAY: 손으로 옮겨 적은 D₅ 계수표. 점화식으로 만든 D₅ 와 계수 단위로 비교합니다.

계수는 Q(ζ₅)[b] 의 다항식이며, x-다항식은 UniPoly(x) 위에 UniPoly(b) 를 계수로 얹은 중첩 구조입니다.
"""

from fractions import Fraction
from functools import lru_cache
import logging

from ..algebra.poly import UniPoly
from .weierstrass import WeierstrassCurve


logger = logging.getLogger(__name__)

# x 차수 → b 의 계수 (낮은 차수부터)
D5_DISPLAY = {
    10: (5,),
    9: (5, 25, 5),
    8: (1, 38, 44, 7, 1),
    7: (0, 9, 127, 26, 3, -1),
    6: (0, 0, 36, 248, 19, -3, 1),
    5: (0, 0, 0, 84, 322, 71, 3, -1),
    4: (0, 0, 0, 0, 126, 293, 94, 12, 1),
    3: (0, 0, 0, 0, 0, 125, 180, 50, 5),
    2: (0, 0, 0, 0, 0, 0, 80, 65, 10),
    1: (0, 0, 0, 0, 0, 0, 0, 30, 10),
    0: (0, 0, 0, 0, 0, 0, 0, 0, 5),
}


def b_ring():
    """(b, Q(ζ₅)[b] 의 0)"""
    return UniPoly.gen("b"), UniPoly((), "b")


def symbolic_tate5():
    b, _ = b_ring()
    return WeierstrassCurve(1 + b, b, b, 0, 0)


def psi5_xpart(curve, var="x"):
    """
    ψ₅ = F₄·(ψ₂²)² - ψ₃³

    F₄ = ψ₄/ψ₂, ψ₂² = 4x³ + b2x² + 2b4x + b6 (b2 = a1² + 4a2)
    """
    b2, b4, b6, b8 = curve.b_invariants
    zero = b2 * 0

    def xpoly(*coeffs):
        return UniPoly(coeffs, var, zero)

    psi2_sq = xpoly(b6, 2 * b4, b2, 4)
    psi3 = xpoly(b8, 3 * b6, 3 * b4, b2, 3)
    f4 = xpoly(b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2)
    return f4 * psi2_sq * psi2_sq - psi3 * psi3 * psi3


@lru_cache(maxsize=None)
def division_poly_5():
    """D₅(x) = ψ₅ / (x(x+b)) as Q(ζ₅)[b][x]"""
    b, zero = b_ring()
    psi5 = psi5_xpart(symbolic_tate5())
    divisor = UniPoly((0, b, 1), "x", zero)
    d5_poly = psi5.exact_div(divisor)
    logger.debug(f"D5 차수: x^{d5_poly.degree}, 최고차 계수 {d5_poly.lc}")
    return d5_poly


@lru_cache(maxsize=None)
def d5():
    """D₅ / 5 (모닉, 차수 10)"""
    return division_poly_5().scale(Fraction(1, 5))


def d5_display():
    """D5_DISPLAY 로부터 만든 다항식"""
    _, zero = b_ring()
    coeffs = [UniPoly(D5_DISPLAY[i], "b") for i in range(11)]
    return UniPoly(coeffs, "x", zero)


def compare_with_display(poly=None):
    """
    D₅ 와 표의 계수 비교.

    Returns:
        (x 차수, 계산값, 표의 값) 목록. 모두 일치하면 빈 목록.
    """
    poly = division_poly_5() if poly is None else poly
    display = d5_display()
    mismatches = []
    for i in range(max(poly.degree, display.degree) + 1):
        if poly.coeff(i) != display.coeff(i):
            mismatches.append((i, poly.coeff(i), display.coeff(i)))
    return mismatches
