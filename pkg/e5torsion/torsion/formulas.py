"""
5-torsion 좌표의 곱 공식 모듈입니다.

## 주요 기능
- b(u) = (ε⁵u⁵ + ε̄⁵)/(u⁵ + 1) 와 그 Q(ζ₅) 위의 인수분해
- X(u): 이차식 표시(α 사용)와 일차식 곱 표시(ζ 사용) 두 가지
- Y₁(u), Y₂(u): 일차식 곱 표시
- 증명에 쓰이는 이차방정식 AY² + BY + C = 0 의 A, B, C, 판별식 D, 그리고 S
- σ = (ζ ↦ ζ², u ↦ 1/u) 작용

모든 공식은 u 에 대한 RatFunc 이며, 곱 표시는 Factored 로도 보관해 보고서에 그대로 출력합니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..algebra.factored import Factored
from ..algebra.field import ALPHA, EPS, EPS_BAR, ONE, ZETA, qa, zeta_pow
from ..algebra.poly import UniPoly
from ..algebra.ratfunc import RatFunc


def upoly(*coeffs):
    return UniPoly(coeffs, "u")


def u_rf(*coeffs):
    return RatFunc._from_coprime(upoly(*coeffs), upoly(1))


def w(i):
    """X 의 영점 ζⁱ(1+ζ)²"""
    return zeta_pow(i) * (ONE + ZETA) ** 2


def minus_root(i):
    """u - ζⁱ(1+ζ)²"""
    return upoly(-w(i), 1)


def plus_zeta(j):
    """u + ζʲ (j = 0 이면 u + 1)"""
    return upoly(zeta_pow(j), 1)


# 증명에 나오는 이차식들
P1 = upoly(qa(-7, -3), qa(1, 1), -2)  # -2u² + (1+α)u - 7 - 3α
P2 = upoly(-2, qa(1, 1), -2)  # -2u² + (1+α)u - 2
QQ = upoly(qa(7, 3), qa(4, 2), 2)  # 2u² + (4+2α)u + 7 + 3α
A_QUAD = upoly(2, qa(-1, 1), 2)  # 2u² + (-1+α)u + 2
B_CUBIC = upoly(qa(6, 2), qa(-2, -2), qa(3, 1), -4)  # -4u³ + (3+α)u² - 2(1+α)u + 6 + 2α
U_PLUS_1 = plus_zeta(0)
# -ζ³ + 3ζ² + 2ζ + 1
BRACKET_UNIT = 1 + 2 * ZETA + 3 * ZETA**2 - ZETA**3


def b_factored():
    return Factored(
        EPS**5,
        tuple((minus_root(i), 1) for i in range(5)),
        tuple((plus_zeta(j), 1) for j in (1, 2, 3, 4, 0)),
    )


def x_factored():
    return Factored(
        -(EPS**4),
        tuple((minus_root(i), 1) for i in range(4)),
        ((plus_zeta(2), 1), (plus_zeta(3), 1), (U_PLUS_1, 2)),
    )


def y1_factored():
    return Factored(
        EPS**7,
        ((minus_root(0), 2), (minus_root(1), 2), (minus_root(2), 2), (minus_root(3), 1)),
        ((plus_zeta(2), 2), (plus_zeta(3), 1), (plus_zeta(4), 1), (U_PLUS_1, 3)),
    )


def y2_factored():
    return Factored(
        EPS**7,
        ((minus_root(0), 1), (minus_root(1), 2), (minus_root(2), 2), (minus_root(3), 2)),
        ((plus_zeta(1), 1), (plus_zeta(2), 1), (plus_zeta(3), 2), (U_PLUS_1, 3)),
    )


def y1_sigma_factored():
    """σ(Y₁) 을 u 의 일차식으로 다시 정리한 표시"""
    return Factored(
        EPS**7,
        ((minus_root(0), 2), (minus_root(1), 1), (minus_root(2), 2), (minus_root(3), 2)),
        ((plus_zeta(1), 2), (plus_zeta(2), 1), (plus_zeta(4), 1), (U_PLUS_1, 3)),
    )


def y1_sigma_raw():
    """
    σ 를 Y₁ 에 그대로 적용한 표시 (1/u 정리 전)

    ε̄⁷·[1-(1+ζ²)²u]²[1-ζ²(1+ζ²)²u]²[1-ζ⁴(1+ζ²)²u]²[1-ζ(1+ζ²)²u] / ((1+ζ⁴u)²(1+ζu)(1+ζ³u)(u+1)³)
    """
    c = (1 + ZETA**2) ** 2

    def one_minus(k):
        return upoly(1, -zeta_pow(k) * c)

    def one_plus(k):
        return upoly(1, zeta_pow(k))

    return Factored(
        EPS_BAR**7,
        ((one_minus(0), 2), (one_minus(2), 2), (one_minus(4), 2), (one_minus(1), 1)),
        ((one_plus(4), 2), (one_plus(1), 1), (one_plus(3), 1), (U_PLUS_1, 3)),
    )


def b_of_u():
    """b(u) = (ε⁵u⁵ - ε̄⁵)/(u⁵ + 1)"""
    return RatFunc(upoly(EPS_BAR**5, 0, 0, 0, 0, EPS**5), upoly(1, 0, 0, 0, 0, 1))


def x_quadratic_form():
    """α 로 표시한 X (이차식 곱)"""
    num = upoly(qa(-7, -3), qa(1, 1), -2) * upoly(qa(7, 3), qa(4, 2), 2)
    den = P2 * U_PLUS_1**2
    return RatFunc(num.scale(qa(-7, 3) / 4), den)


def x_remarks_form():
    """X = -ε⁴·∏ᵢ₌₀³ (u - ζⁱ(1+ζ)²)/(u + ζⁱ)·(u + ζ)/(u + 1)"""
    f = u_rf(-(EPS**4))
    for i in range(4):
        f = f * RatFunc(minus_root(i), plus_zeta(i))
    return f * RatFunc(plus_zeta(1), U_PLUS_1)


def x2p_display():
    """두 배 점의 X: 이차식 곱 표시에서 분모의 α 만 -α 로 바꾼 것"""
    num = upoly(qa(-7, -3), qa(1, 1), -2) * upoly(qa(7, 3), qa(4, 2), 2)
    den = upoly(-2, qa(1, -1), -2) * U_PLUS_1**2
    return RatFunc(num.scale(qa(-7, 3) / 4), den)


def x2p_numerator_display():
    """(28-12α)u⁴ + (12-4α)u³ + 8u² + (12+4α)u + 28 + 12α"""
    return upoly(qa(28, 12), qa(12, 4), 8, qa(12, -4), qa(28, -12))


def sigma(f):
    """σ = (ζ ↦ ζ², u ↦ 1/u)"""
    return f.conjugate(2).invert()


@dataclass(frozen=True)
class TorsionFormulas:
    b_of_u: RatFunc
    X_of_u: RatFunc
    Y1_of_u: RatFunc
    Y2_of_u: RatFunc
    quadA: RatFunc
    quadB: RatFunc
    quadC: RatFunc
    quadD: RatFunc
    S: RatFunc


def _rf(poly):
    return RatFunc._from_coprime(poly, upoly(1))


@lru_cache(maxsize=None)
def build_formulas():
    """곱 표시로부터 모든 공식을 만듭니다."""
    S = upoly(0, 0, 1) * P1 * P2 * QQ**2 * U_PLUS_1**3
    quadA = A_QUAD * P2**3 * U_PLUS_1**6
    quadB = B_CUBIC * P1 * P2 * QQ**2 * U_PLUS_1**3
    quadC = P1**3 * QQ**4
    quadD = S * S
    return TorsionFormulas(
        b_of_u=b_of_u(),
        X_of_u=x_factored().expand(),
        Y1_of_u=y1_factored().expand(),
        Y2_of_u=y2_factored().expand(),
        quadA=_rf(quadA.scale(Fraction(1, 8))),
        quadB=_rf(quadB.scale(-(EPS**7) / 16)),
        quadC=_rf(quadC.scale(EPS**14 / 64)),
        quadD=_rf(quadD.scale(-5 * ALPHA * EPS**13 / 64)),
        S=_rf(S),
    )


def factorization_lemmas():
    """
    증명에 쓰인 인수분해 보조정리들.

    Returns:
        [(이름, 좌변, 우변)]
    """
    lemmas = [
        ("2u²+(-1+α)u+2 = 2(u+ζ)(u+ζ⁴)", A_QUAD, (plus_zeta(1) * plus_zeta(4)).scale(2)),
        ("-2u²+(1+α)u-2 = -2(u+ζ²)(u+ζ³)", P2, (plus_zeta(2) * plus_zeta(3)).scale(-2)),
        ("-2u²+(1+α)u-7-3α = -2(u-w₀)(u-w₃)", P1, (minus_root(0) * minus_root(3)).scale(-2)),
        ("2u²+(4+2α)u+7+3α = 2(u-w₁)(u-w₂)", QQ, (minus_root(1) * minus_root(2)).scale(2)),
        (
            "B 삼차식 + 2(…)u² = -4(u+ζ)(u+ζ³)(u-w₀)",
            B_CUBIC + upoly(0, 0, 2 * BRACKET_UNIT),
            (plus_zeta(1) * plus_zeta(3) * minus_root(0)).scale(-4),
        ),
        (
            "B 삼차식 - 2(…)u² = -4(u+ζ²)(u+ζ⁴)(u-w₃)",
            B_CUBIC - upoly(0, 0, 2 * BRACKET_UNIT),
            (plus_zeta(2) * plus_zeta(4) * minus_root(3)).scale(-4),
        ),
    ]
    return lemmas


def scalar_identities():
    """
    Returns:
        [(이름, 좌변, 우변)] Q(ζ₅) 원소 항등식
    """
    z = ZETA
    return [
        ("(ζ²-ζ³)·α·ε⁶ = ε⁷(-ζ³+3ζ²+2ζ+1)", (z**2 - z**3) * ALPHA * EPS**6, EPS**7 * BRACKET_UNIT),
        ("-αε = (ζ²-ζ³)²", -ALPHA * EPS, (z**2 - z**3) ** 2),
        ("1/ε = -ε̄", 1 / EPS, -EPS_BAR),
        ("1/(1+ζ²)² = ζ²(1+ζ)²", 1 / (1 + z**2) ** 2, z**2 * (1 + z) ** 2),
        ("(ζ²+ζ³)⁷(1+ζ²)¹⁴ζ = 21+13(ζ²+ζ³)", EPS_BAR**7 * (1 + z**2) ** 14 * z, 21 + 13 * EPS_BAR),
        ("21+13(ζ²+ζ³) = -ε⁷", 21 + 13 * EPS_BAR, -(EPS**7)),
        ("ε = (-1+α)/2", EPS, (ALPHA - 1) / 2),
        ("ε̄ = (-1-α)/2", EPS_BAR, (-ALPHA - 1) / 2),
    ]


def unit_constants():
    """영점/극점으로 나타나는 Q(ζ₅) 원소 (노름이 ±1 이어야 함)"""
    units = {f"w{i}": w(i) for i in range(5)}
    units.update({f"-ζ^{j}": -zeta_pow(j) for j in range(5)})
    units.update({"1+ζ": 1 + ZETA, "ε": EPS, "ε̄": EPS_BAR})
    quartic_roots = {
        "ζ+ζ²": ZETA + ZETA**2,
        "ζ²+ζ⁴": ZETA**2 + ZETA**4,
        "ζ³+ζ⁴": ZETA**3 + ZETA**4,
        "ζ+ζ³": ZETA + ZETA**3,
    }
    units.update(quartic_roots)
    return units
