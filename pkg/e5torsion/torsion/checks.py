"""
곱 공식과 20개 점에 대한 정확한 검증 모음입니다.

각 검증 함수는 (통과 여부, 설명) 튜플을 돌려주고, verify_order5 / verify_doubling 처럼
여러 단계로 이루어진 검증은 [(id, 통과 여부, 설명)] 목록을 돌려줍니다.
모든 계산은 Q(ζ₅)(u) 위에서 이루어지며, b 는 항상 b(u) 로 소거합니다.
"""

from functools import lru_cache
from itertools import combinations
import logging

from ..algebra.field import ALPHA, EPS, qa
from ..algebra.poly import UniPoly
from ..curve.division import division_poly_5
from ..curve.eprime import eprime_double, from_eprime, to_eprime
from ..curve.weierstrass import CurvePoint, tate5
from .formulas import (
    b_factored,
    build_formulas,
    factorization_lemmas,
    scalar_identities,
    sigma,
    unit_constants,
    x2p_display,
    x2p_numerator_display,
    x_factored,
    x_quadratic_form,
    x_remarks_form,
    y1_sigma_factored,
    y1_sigma_raw,
)
from .points import all_labels, point, pole_set, sigma_label, x_functions


logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def symbolic_curve():
    """E₅(b(u)) over Q(ζ₅)(u)"""
    return tate5(build_formulas().b_of_u)


def base_point():
    tf = build_formulas()
    return CurvePoint(tf.X_of_u, tf.Y1_of_u)


def _verdict(pairs):
    """[(이름, 좌변, 우변)] → (통과 여부, 실패한 이름 목록)"""
    failed = [name for name, lhs, rhs in pairs if lhs != rhs]
    if failed:
        return False, "불일치: " + "; ".join(failed)
    return True, f"{len(pairs)}개 모두 일치"


# ---- b(u) 와 X(u) 의 표시 ----
def b_factorization_check():
    """b(u) 와 ε⁵·∏(u-ζⁱ(1+ζ)²)/∏(u+ζʲ) 의 표준형 비교"""
    b = build_formulas().b_of_u
    expanded = b_factored().expand()
    if b != expanded:
        return False, f"b(u) = {b}, 곱 표시 = {expanded}"
    return True, f"분자 차수 {b.num.degree}, 분모 차수 {b.den.degree}"


def x_forms_check():
    """인수분해 표시 = 이차식 곱 표시 = 일차분수식 곱 표시, X(1) = -(11/8)(3+α)"""
    X = x_factored().expand()
    pairs = [
        ("인수분해 = 이차식 곱", X, x_quadratic_form()),
        ("인수분해 = 일차분수식 곱", X, x_remarks_form()),
        ("X(1) = -(11/8)(3+α)", X.evaluate(1), qa(3, 1) * (-11) / 8),
    ]
    return _verdict(pairs)


def curve_membership_check():
    """20개 (X, Y) 가 E₅(b(u)) 의 방정식을 항등적으로 만족"""
    curve = symbolic_curve()
    failed = [str(label) for label in all_labels() if not curve.is_on_curve(CurvePoint(*point(label)))]
    if failed:
        return False, "곡선 위에 있지 않음: " + ", ".join(failed)
    return True, "20개 점 모두 곡선 위"


def vieta_check():
    """Y₁ + Y₂ = -B/A, Y₁·Y₂ = C/A"""
    tf = build_formulas()
    pairs = [
        ("Y1 + Y2 = -B/A", tf.Y1_of_u + tf.Y2_of_u, -tf.quadB / tf.quadA),
        ("Y1·Y2 = C/A", tf.Y1_of_u * tf.Y2_of_u, tf.quadC / tf.quadA),
    ]
    return _verdict(pairs)


def discriminant_check():
    """D = B² - 4AC = (-αε)·(αε⁶S/8)²"""
    tf = build_formulas()
    square = (ALPHA * EPS**6 / 8) * tf.S
    pairs = [
        ("D = B² - 4AC", tf.quadD, tf.quadB**2 - 4 * tf.quadA * tf.quadC),
        ("D = (-αε)·(αε⁶S/8)²", tf.quadD, -ALPHA * EPS * square**2),
    ]
    return _verdict(pairs)


def lemma_check():
    return _verdict(factorization_lemmas())


def scalar_identity_check():
    return _verdict(scalar_identities())


def unit_check():
    """영점/극점 상수의 노름이 ±1"""
    bad = [name for name, c in unit_constants().items() if c.norm() not in (1, -1)]
    if bad:
        return False, "단원이 아님: " + ", ".join(bad)
    return True, f"{len(unit_constants())}개 상수 모두 노름 ±1"


# ---- 점 목록 ----
def census_check():
    """서로 다른 X 10개, X 마다 서로 다른 Y 2개, ⟨(0,0)⟩ 밖의 점 20개"""
    b = build_formulas().b_of_u
    xs = x_functions()
    if len(set(xs)) != 10:
        return False, f"서로 다른 X 함수가 {len(set(xs))}개"
    pts = {point(label) for label in all_labels()}
    if len(pts) != 20:
        return False, f"서로 다른 점이 {len(pts)}개"
    for label in all_labels():
        X, _ = point(label)
        if not X or not (X + b):
            return False, f"{label} 가 ⟨(0,0)⟩ 의 X 좌표와 같습니다."
    return True, "서로 다른 점 20개 + ⟨(0,0)⟩ 의 자명하지 않은 점 4개 = 24"


def _homogenized_d5(X, b):
    """D₅(X, b) 에 분모를 곱해 없앤 u 의 다항식"""
    D5 = division_poly_5()
    nb, db = b.num, b.den
    nx, dx = X.num, X.den
    deg_b = max(c.degree for c in D5.coeffs)
    deg_x = D5.degree
    b_terms = [nb**k * db ** (deg_b - k) for k in range(deg_b + 1)]
    total = UniPoly((), X.var)
    for j, cj in enumerate(D5.coeffs):
        if not cj:
            continue
        inner = UniPoly((), X.var)
        for k, c in enumerate(cj.coeffs):
            if c:
                inner = inner + b_terms[k].scale(c)
        total = total + inner * nx**j * dx ** (deg_x - j)
    return total


def d5_root_check():
    """10개의 X 함수가 모두 D₅(x, b(u)) 의 근"""
    b = build_formulas().b_of_u
    failed = [i for i, X in enumerate(x_functions()) if _homogenized_d5(X, b)]
    if failed:
        return False, f"D₅ 의 근이 아닌 X 함수 번호: {failed}"
    return True, "10개 X 함수 모두 D₅ 의 근"


def pole_disjointness_check():
    """X 함수들의 극점 집합이 서로 다름"""
    poles = [pole_set(X) for X in x_functions()]
    clash = [(i, j) for i, j in combinations(range(len(poles)), 2) if poles[i] == poles[j]]
    if clash:
        return False, f"극점 집합이 같은 쌍: {clash}"
    return True, "극점 집합 10개 모두 서로 다름"


# ---- 위수 5 와 두 배 점 ----
def verify_order5():
    """
    P = (X, Y₁) 에 대해 4P = -P, 5P = O, P^(σ²) = -P, P^σ = ±2P 를 확인합니다.

    Returns:
        [(id, 통과 여부, 설명)]
    """
    curve = symbolic_curve()
    tf = build_formulas()
    P = base_point()
    results = []

    P2 = curve.double(P)
    P4 = curve.double(P2)
    minus_P = curve.neg(P)
    results.append(("4P=-P", curve.equal(P4, minus_P), "4P 와 -P 비교"))
    five = curve.add(P4, P)
    results.append(("5P=O", five.is_infinity, "5P = O" if five.is_infinity else f"5P = {five}"))

    y1_sigma2 = tf.Y1_of_u.conjugate(4)
    results.append(("sigma2-Y1=Y2", y1_sigma2 == tf.Y2_of_u, "Y₁^(σ²) 와 Y₂ 비교"))
    results.append(("Y2=-P", minus_P.y == tf.Y2_of_u, "-P 의 Y 좌표와 Y₂ 비교"))

    y1_sigma = sigma(tf.Y1_of_u)
    ok = y1_sigma == y1_sigma_factored().expand() and y1_sigma == y1_sigma_raw().expand()
    results.append(("sigma-Y1-display", ok, "Y₁^σ 와 두 가지 표시 비교"))

    P_sigma = CurvePoint(sigma(tf.X_of_u), y1_sigma)
    if curve.equal(P_sigma, P2):
        sign, ok = "+", True
    elif curve.equal(P_sigma, curve.neg(P2)):
        sign, ok = "-", True
    else:
        sign, ok = "?", False
    logger.info(f"P^σ = {sign}2P")
    results.append(("sigma-sign", ok, f"P^σ = {sign}2P"))

    images = [sigma_label(label) for label in all_labels()]
    ok = None not in images and len(set(images)) == len(images)
    results.append(("sigma-permutes-points", ok, "σ 가 20개 점 집합을 자기 자신으로 보냄"))
    return results


def verify_doubling():
    """
    X(2P) 를 E′ 두 배 공식과 (ζ ↦ ζ², u ↦ 1/u) 두 가지로 구해 비교합니다.

    Returns:
        [(id, 통과 여부, 설명)]
    """
    tf = build_formulas()
    b, X = tf.b_of_u, tf.X_of_u
    results = []

    x_sigma = sigma(X)
    results.append(("sigma-X=display", x_sigma == x2p_display(), "X^σ 와 이차식 곱 표시의 α ↦ -α 비교"))

    Yp = to_eprime(b, base_point()).y
    X2, Y2p = eprime_double(b, X, Yp)
    results.append(("doubling=sigma", X2 == x_sigma, "E′ 두 배 공식의 X(2P) 와 X^σ 비교"))

    numerator = x2p_numerator_display()
    ok = x_sigma.num.monic() == numerator.monic()
    results.append(("numerator-display", ok, f"X(2P) 분자 ∝ {numerator}"))
    invariant = numerator.conjugate(2).reverse(4) == numerator
    results.append(("numerator-invariance", invariant, "α ↦ -α, u ↦ 1/u 에서 u⁴ 배를 빼면 불변"))

    results.append(("X(4P)=X(P)", sigma(x_sigma) == X, "σ 두 번 적용"))

    # 두 가지 두 배 경로를 u = 1 에서 정확히 비교
    b1 = b.evaluate(1)
    P1 = CurvePoint(X.evaluate(1), tf.Y1_of_u.evaluate(1))
    curve1 = tate5(b1)
    generic = curve1.double(P1)
    x2, y2p = eprime_double(b1, P1.x, to_eprime(b1, P1).y)
    via_eprime = from_eprime(b1, CurvePoint(x2, y2p))
    results.append(("two-doublings-u=1", curve1.equal(generic, via_eprime), f"b = {b1}"))

    doubled = from_eprime(b, CurvePoint(X2, Y2p))
    y_sigma = sigma(tf.Y1_of_u)
    ok = doubled.y == y_sigma or doubled.y == -y_sigma - (1 + b) * X2 - b
    results.append(("eprime-Y", ok, "E′ 의 Y′(2P) 를 되돌린 값과 ±P^σ 의 Y 비교"))
    return results
