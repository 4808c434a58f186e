"""
E₅(b)[5] ∖ ⟨(0,0)⟩ 의 20개 점 열거 모듈입니다.

## 주요 기능
- PointLabel(i, branch, sign): u ↦ ζ⁻ⁱu 비틀기, principal/conjugate 가지, Y1/Y2 선택
- point(label): 라벨에 해당하는 (X, Y) 유리함수
- sigma_label(label): σ 가 옮긴 점의 라벨
- exact_points(u): u 가 Q(ζ₅) 의 정확한 값일 때 20개 점을 계산하고 곡선/위수 5 를 정확히 확인
- numeric_points(b): b 가 주어지면 u⁵ = φ(b) 의 주 다섯제곱근으로 20개 점을 수치 계산
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
import math

import mpmath

from ..algebra.field import ALPHA, CycloElement, zeta_pow
from ..algebra.poly import UniPoly
from ..curve.weierstrass import CurvePoint, tate5
from ..errors import IdentityError, PoleError, SingularCurveError, ToleranceError
from .formulas import build_formulas, sigma


logger = logging.getLogger(__name__)

BRANCHES = ("principal", "conjugate")
SIGNS = ("Y1", "Y2")


@dataclass(frozen=True)
class PointLabel:
    i: int
    branch: str = "principal"
    sign: str = "Y1"

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"branch 는 {BRANCHES} 중 하나여야 합니다: {self.branch}")
        if self.sign not in SIGNS:
            raise ValueError(f"sign 은 {SIGNS} 중 하나여야 합니다: {self.sign}")
        object.__setattr__(self, "i", self.i % 5)

    def __str__(self):
        return f"{self.branch}[{self.i}]/{self.sign}"


def all_labels():
    return [PointLabel(i, branch, sign) for branch in BRANCHES for i in range(5) for sign in SIGNS]


@lru_cache(maxsize=None)
def _base(branch, sign):
    tf = build_formulas()
    X = tf.X_of_u
    Y = tf.Y1_of_u if sign == "Y1" else tf.Y2_of_u
    if branch == "conjugate":
        X, Y = sigma(X), sigma(Y)
    return X, Y


@lru_cache(maxsize=None)
def point(label):
    """(X, Y) as RatFunc in u"""
    X, Y = _base(label.branch, label.sign)
    if label.i:
        X, Y = X.twist(-label.i), Y.twist(-label.i)
    return X, Y


def sigma_label(label):
    """σ(point(label)) 와 같은 점의 라벨 (없으면 None)"""
    X, Y = point(label)
    image = (sigma(X), sigma(Y))
    return next((other for other in all_labels() if point(other) == image), None)


def x_functions():
    """서로 다른 X 함수 10개 (라벨 순서)"""
    return [point(PointLabel(i, branch, "Y1"))[0] for branch in BRANCHES for i in range(5)]


def pole_set(f):
    """분모를 나누는 u + ζʲ 의 j 집합"""
    return frozenset(j for j in range(5) if UniPoly((zeta_pow(j), 1), f.var).divides(f.den))


def _name_pole(f, u):
    for j in range(5):
        if not (u + zeta_pow(j)):
            return f"u + ζ^{j}"
    return str(f.den)


def _evaluate(f, u, what):
    try:
        return f.evaluate(u)
    except PoleError as e:
        raise PoleError(f"{what} 의 극점입니다: {_name_pole(f, u)} = 0") from e


def exact_points(u):
    """
    u ∈ Q(ζ₅) 에서 20개 점을 정확히 계산합니다.

    Returns:
        (b, [(label, CurvePoint)])

    Raises:
        PoleError: u⁵ = -1 등으로 공식의 분모가 0
        SingularCurveError: b(u) 가 특이 곡선을 주는 경우 (예: u = 0)
    """
    u = u if isinstance(u, CycloElement) else CycloElement(u)
    b = _evaluate(build_formulas().b_of_u, u, "b(u)")
    curve = tate5(b)
    points = []
    for label in all_labels():
        X, Y = point(label)
        P = CurvePoint(_evaluate(X, u, f"{label} X"), _evaluate(Y, u, f"{label} Y"))
        if not curve.is_on_curve(P):
            raise IdentityError(f"{label} 점이 곡선 위에 있지 않습니다.")
        if curve.order(P, bound=5) != 5:
            raise IdentityError(f"{label} 점의 위수가 5 가 아닙니다.")
        points.append((label, P))
    return b, points


# 작업 정밀도: 기본 자릿수 + b 가 특이값/무한대에 가까운 정도(자릿수)마다 추가
MIN_DPS = 30
DPS_PER_DIGIT = 8


def phi_numeric(b, alpha=None):
    """φ(b) = (2b+11+5α)/(-2b-11+5α), α 의 기본값은 주 매장의 √5"""
    if alpha is None:
        alpha = complex(ALPHA.embed(1))
    den = -2 * b - 11 + 5 * alpha
    if den == 0:
        raise SingularCurveError(f"b = {b} 에서 φ(b) 의 분모가 0 입니다.")
    return (2 * b + 11 + 5 * alpha) / den


def working_dps(b):
    """|b|, 1/|b|, 1/|b²+11b-1| 중 가장 큰 값의 자릿수만큼 정밀도를 늘림"""
    b = complex(b)
    worst = max(1.0, abs(b), 1 / abs(b), 1 / abs(b * b + 11 * b - 1))
    return MIN_DPS + DPS_PER_DIGIT * math.ceil(math.log10(worst))


def _mp_scalar(c, zetas):
    if isinstance(c, CycloElement):
        acc = mpmath.mpc(0)
        for f, z in zip(c.coeffs, zetas):
            if f:
                acc += mpmath.mpf(f.numerator) / f.denominator * z
        return acc
    if isinstance(c, Fraction):
        return mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
    return mpmath.mpc(c)


def _mp_eval(f, x, zetas, what):
    def horner(poly):
        acc = mpmath.mpc(0)
        for c in reversed(poly.coeffs):
            acc = acc * x + _mp_scalar(c, zetas)
        return acc

    den = horner(f.den)
    if den == 0:
        raise PoleError(f"{what} 의 극점입니다 (u = {mpmath.nstr(x, 10)}).")
    return horner(f.num) / den


def numeric_points(b, tol=1e-9):
    """
    주어진 b 에 대해 u = φ(b)^(1/5) (주 가지) 로 20개 점을 수치 계산합니다.

    b 가 정확한 값(int, Fraction, CycloElement)이면 특이성은 정확히 판정하고, 그 밖의 계산은
    working_dps(b) 자릿수의 mpmath 로 수행한 뒤 complex 로 돌려줍니다.
    곡선 방정식 잔차는 max(1, |X|³, |Y|²) 에, 4P 와 -P 의 차이는 max(1, |X|, |Y|) 에 비례한 허용오차로 봅니다.

    Returns:
        (u, [(label, CurvePoint)])

    Raises:
        SingularCurveError: b 가 특이 곡선을 주는 경우
        ToleranceError: 잔차가 허용오차를 넘는 경우
    """
    if isinstance(b, (int, Fraction, CycloElement)):
        b = b if isinstance(b, CycloElement) else CycloElement(b)
        tate5(b)
        b_value = complex(b.embed(1))
    else:
        b = b_value = complex(b)
        # 판별식 -b⁵(b²+11b-1) 은 b 가 작으면 tol 보다 작아지므로 인수별로 확인
        if abs(b) <= tol or abs(b * b + 11 * b - 1) <= tol:
            raise SingularCurveError(f"b = {b} 에서 E₅(b) 는 특이 곡선입니다.")

    dps = working_dps(b_value)
    with mpmath.workdps(dps):
        zetas = [mpmath.expjpi(mpmath.mpf(2 * j) / 5) for j in range(4)]
        b_mp = _mp_scalar(b, zetas)
        u = mpmath.root(phi_numeric(b_mp, _mp_scalar(ALPHA, zetas)), 5)
        logger.debug(f"b = {b_value}, u = {complex(u)}, {dps} 자리")
        curve = tate5(b_mp, tol=mpmath.mpf(10) ** (-(dps // 2)), check=False)
        points = []
        for label in all_labels():
            X, Y = point(label)
            P = CurvePoint(_mp_eval(X, u, zetas, f"{label} X"), _mp_eval(Y, u, zetas, f"{label} Y"))
            residual = abs(curve.residual(P))
            if residual > tol * max(1, abs(P.x) ** 3, abs(P.y) ** 2):
                raise ToleranceError(f"{label} 곡선 방정식 잔차 {mpmath.nstr(residual, 5)} > {tol:.1e}")
            P4 = curve.double(curve.double(P))
            minus_P = curve.neg(P)
            gap = mpmath.inf if P4.is_infinity else max(abs(P4.x - minus_P.x), abs(P4.y - minus_P.y))
            if gap > tol * max(1, abs(P.x), abs(P.y)):
                raise ToleranceError(f"{label} 점의 4배와 -P 의 차이 {mpmath.nstr(gap, 5)} 가 허용오차 {tol:.1e} 를 넘습니다.")
            points.append((label, CurvePoint(complex(P.x), complex(P.y))))
    return complex(u), points
