"""
긴 Weierstrass 곡선과 군 연산 모듈입니다.

## 주요 기능
- WeierstrassCurve: [a1, a2, a3, a4, a6] 와 b2, b4, b6, b8, 판별식
- CurvePoint: 무한원점(INFINITY) 또는 아핀 점 (x, y)
- 덧셈/두 배/스칼라 곱: 정확한 체(Q, Q(ζ₅), 유리함수체)와 복소수(허용오차) 모두에서 같은 코드로 동작
- tate5(b): Tate 표준형 E₅(b): Y² + (1+b)XY + bY = X³ + bX²
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging

from ..algebra.ratfunc import RatFunc
from ..errors import SingularCurveError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvePoint:
    x: object = None
    y: object = None

    @property
    def is_infinity(self):
        return self.x is None

    def __iter__(self):
        return iter((self.x, self.y))

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def _scalar(v):
    # 정수는 Fraction 으로 올려서 나눗셈이 정확하도록 함
    return Fraction(v) if isinstance(v, int) else v


class WeierstrassCurve:
    """
    Y² + a1·XY + a3·Y = X³ + a2·X² + a4·X + a6

    Args:
        tol: None 이면 정확한 비교, 숫자이면 복소수 좌표를 절대오차 tol 로 비교합니다.
    """

    def __init__(self, a1, a2, a3, a4, a6, tol=None):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (_scalar(a) for a in (a1, a2, a3, a4, a6))
        self.tol = tol

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_zero(self, v):
        if self.tol is None:
            return not v
        return abs(v) <= self.tol

    def check_nonsingular(self):
        if self.is_zero(self.discriminant):
            raise SingularCurveError(f"판별식이 0 인 특이 곡선입니다: {list(self.coefficients)}")
        return self

    # ---- 점 ----
    def residual(self, P):
        """곡선 방정식의 좌변 - 우변"""
        if P.is_infinity:
            return 0
        x, y = P
        a1, a2, a3, a4, a6 = self.coefficients
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)

    def is_on_curve(self, P):
        return P.is_infinity or self.is_zero(self.residual(P))

    def equal(self, P, Q):
        if P.is_infinity or Q.is_infinity:
            return P.is_infinity and Q.is_infinity
        return self.is_zero(P.x - Q.x) and self.is_zero(P.y - Q.y)

    def neg(self, P):
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P, Q):
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.coefficients
        x1, y1 = P
        x2, y2 = Q
        if self.is_zero(x1 - x2):
            if self.is_zero(y1 + y2 + a1 * x2 + a3):
                return INFINITY
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            dx = x2 - x1
            lam = (y2 - y1) / dx
            nu = (y1 * x2 - y2 * x1) / dx
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3)

    def double(self, P):
        return self.add(P, P)

    def mul(self, k, P):
        """double-and-add 로 k·P"""
        if k < 0:
            return self.mul(-k, self.neg(P))
        result, base = INFINITY, P
        while k:
            if k & 1:
                result = self.add(result, base)
            k >>= 1
            if k:
                base = self.double(base)
        return result

    def order(self, P, bound=12):
        """bound 이하의 위수, 없으면 None"""
        Q = P
        for n in range(1, bound + 1):
            if Q.is_infinity:
                return n
            Q = self.add(Q, P)
        return None

    def __repr__(self):
        return "WeierstrassCurve[{}]".format(", ".join(str(a) for a in self.coefficients))


def group_law(E, P, Q=None, op="add", k=None):
    """군 연산 진입점: op ∈ {neg, add, double, scalar}"""
    if op == "neg":
        return E.neg(P)
    if op == "add":
        return E.add(P, Q)
    if op == "double":
        return E.double(P)
    if op == "scalar":
        return E.mul(k, P)
    raise ValueError(f"지원하지 않는 군 연산입니다: {op}")


def tate5(b, tol=None, check=True):
    """E₅(b) = [1+b, b, b, 0, 0]"""
    b = _scalar(b)
    curve = WeierstrassCurve(1 + b, b, b, 0, 0, tol=tol)
    if check:
        curve.check_nonsingular()
    return curve


def tate5_discriminant():
    """b 의 다항식으로서의 E₅(b) 판별식"""
    b = RatFunc.gen("b")
    return tate5(b).discriminant.num


def origin_subgroup(b):
    """⟨(0,0)⟩ = {O, (0,0), (0,-b), (-b,0), (-b,b²)}"""
    b = _scalar(b)
    zero = b * 0
    return [INFINITY, CurvePoint(zero, zero), CurvePoint(zero, -b), CurvePoint(-b, zero), CurvePoint(-b, b * b)]
