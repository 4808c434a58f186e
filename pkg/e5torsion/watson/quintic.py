"""
g(X) 에 대한 Watson 풀이 파이프라인 모듈입니다.

## 주요 기능
- build_g: D₅ 의 인수 g(X) (α 부호는 계수 갈루아 작용으로 선택)
- depress: f(x) = g(x - a1/5) = x⁵ + 10Cx³ + 10Dx² + 5Ex + F
- resolvent: K, L, M, δ, √δ 와 육차 분해식 h(x)
- radical_data: T, R1, R2, X′, Y, Z 와 막대(bar) 변형
- assemble_root: u⁵, A₀ … A₄ 와 근 X(u)
- root_identity: Q(α)(b)[u]/(u⁵ - u5) 안에서 g(X(u)) = 0 검증
- eisenstein_check, lagrange_resolvent: 기약성/쿰머 원소 교차 검증

제곱근과 다섯제곱근은 직접 구하지 않고, 닫힌 형태를 만든 뒤 거듭제곱 항등식을 확인합니다.
"""

from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
import logging

from ..algebra.field import ALPHA, zeta_pow
from ..algebra.poly import UniPoly
from ..algebra.ratfunc import RatFunc, rf_zero
from ..curve.division import division_poly_5
from ..errors import DegenerateResolventError, IdentityError
from .closed_forms import K_SCALE, closed_forms, expanded_root_display, g_coefficients


logger = logging.getLogger(__name__)

RF_ZERO = rf_zero("b")


@dataclass(frozen=True)
class WatsonData:
    a1: RatFunc
    C: RatFunc
    D: RatFunc
    E: RatFunc
    F: RatFunc
    K: RatFunc
    L: RatFunc
    M: RatFunc
    delta: RatFunc
    sqrt_delta: RatFunc
    theta: RatFunc
    T: RatFunc
    R1: RatFunc
    R2: RatFunc
    Xp: RatFunc
    Yw: RatFunc
    Zw: RatFunc
    Xbar: RatFunc
    Ybar: RatFunc
    Zbar: RatFunc
    u1_fifth: RatFunc
    u5: RatFunc
    c1: RatFunc
    A0: RatFunc
    A1: RatFunc
    A2: RatFunc
    A3: RatFunc
    A4: RatFunc

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def xpoly(coeffs, var="X"):
    return UniPoly(coeffs, var, RF_ZERO)


@lru_cache(maxsize=None)
def build_g(alpha_sign=1):
    """
    g(X) = X⁵ + a1X⁴ + … + b⁴.

    alpha_sign = -1 은 α ↦ -α 가지이며 ζ ↦ ζ² 계수 작용으로 만듭니다.
    """
    if alpha_sign not in (1, -1):
        raise ValueError(f"alpha_sign 은 +1 또는 -1 이어야 합니다: {alpha_sign}")
    a5, a4, a3, a2, a1 = g_coefficients()
    g = xpoly((a5, a4, a3, a2, a1, 1))
    return g if alpha_sign == 1 else g.conjugate(2)


def polynomial_coefficients(poly, var="b"):
    """Q(ζ₅)(b) 계수를 Q(ζ₅)[b] 다항식 계수로 바꿉니다 (분모가 상수여야 함)."""

    def to_poly(c):
        if not c.is_polynomial():
            raise IdentityError(f"계수가 {var} 의 다항식이 아닙니다: {c}")
        return c.num

    return poly.map_coeffs(to_poly, zero=UniPoly((), var))


def factorization_check():
    """5·g·g^σ = D₅ (X, b 에 대한 항등식)"""
    product = (build_g(1) * build_g(-1)).scale(5)
    lhs = polynomial_coefficients(product).rename("x")
    return lhs == division_poly_5()


def depress(g):
    """(f, C, D, E, F)"""
    if g.degree != 5 or g.lc != 1:
        raise ValueError("모닉 오차다항식만 평행이동할 수 있습니다.")
    a1 = g.coeff(4)
    shift = UniPoly((-a1 / 5, 1), "x", RF_ZERO)
    f = g.compose(shift)
    if f.coeff(4):
        raise IdentityError("평행이동 후에도 x⁴ 항이 남았습니다.")
    return f, f.coeff(3) / 10, f.coeff(2) / 10, f.coeff(1) / 5, f.coeff(0)


def resolvent(C, D, E, F):
    """(K, L, M, delta, sqrt_delta, h)"""
    forms = closed_forms()
    K = E + 3 * C**2
    L = -2 * D * F + 3 * E**2 - 2 * C**2 * E + 8 * C * D**2 + 15 * C**4
    M = (
        C * F**2
        - 2 * D * E * F
        + E**3
        - 2 * C**2 * D * F
        - 11 * C**2 * E**2
        + 28 * C * D**2 * E
        - 16 * D**4
        + 35 * C**4 * E
        - 40 * C**3 * D**2
        - 25 * C**6
    )
    f = xpoly((F, 5 * E, 10 * D, 10 * C, 0, 1), "x")
    # 계수가 b 의 다항식이므로 Q(ζ₅)[b] 위에서 Bareiss 로 판별식을 구함
    disc = polynomial_coefficients(f).discriminant(method="bareiss")
    delta = RatFunc._from_coprime(disc, UniPoly((1,), "b"))
    sqrt_delta = forms["sqrt_delta"]
    h = xpoly(
        (M / 3125, -ALPHA * sqrt_delta / 390625, L / 125, 0, -K / 5, 0, 1),
        "x",
    )
    return K, L, M, delta, sqrt_delta, h


def radical_data(C, D, E, theta, T):
    """(R1, R2, Xp, Yw, Zw, Xbar, Ybar, Zbar)"""
    if not theta or theta == C or theta == -C:
        raise DegenerateResolventError("θ = 0 또는 θ = ±C 이면 Watson 공식이 적용되지 않습니다.")
    R1 = closed_forms()["R1"]
    R2 = (C * (D**2 - T**2) + (C**2 - theta**2) * (C**2 + 3 * theta**2 - E)) / (R1 * theta)
    half = Fraction(1, 2)
    Xp = half * (-D + T + R1)
    Yw = half * (-D - T + R2)
    Zw = -C - theta
    Xbar = half * (-D + T - R1)
    Ybar = half * (-D - T - R2)
    Zbar = -C + theta
    return R1, R2, Xp, Yw, Zw, Xbar, Ybar, Zbar


def assemble_root(Xp, Yw, Zw, Xbar, Ybar, Zbar, a1):
    """
    u₁⁵ = X′²Y/Z² 에서 u5 를 뽑아내고 uᵢ = K_SCALE·Aᵢ·uⁱ 의 Aᵢ 를 계산합니다.

    Returns:
        (u1_fifth, u5, c1, [A0, …, A4])
    """
    forms = closed_forms()
    u1_fifth = Xp**2 * Yw / Zw**2
    c1 = forms["c1"]
    u5 = u1_fifth / c1**5
    # u₁ = c1·u, u₂ = X̄/Z̄²·u₁², u₃ = X̄Ȳ/(ZZ̄³)·u₁³, u₄ = X̄²Ȳ/(Z²Z̄⁴)·u₁⁴
    terms = [
        c1,
        Xbar / Zbar**2 * c1**2,
        Xbar * Ybar / (Zw * Zbar**3) * c1**3,
        Xbar**2 * Ybar / (Zw**2 * Zbar**4) * c1**4,
    ]
    A = [-a1 / 5 / K_SCALE] + [t / K_SCALE for t in terms]
    return u1_fifth, u5, c1, A


@lru_cache(maxsize=None)
def run_pipeline():
    """g 로부터 모든 Watson 양을 계산해 WatsonData 로 돌려줍니다."""
    forms = closed_forms()
    g = build_g(1)
    a1 = g.coeff(4)
    _, C, D, E, F = depress(g)
    K, L, M, delta, sqrt_delta, _ = resolvent(C, D, E, F)
    theta, T = forms["theta"], forms["T"]
    R1, R2, Xp, Yw, Zw, Xbar, Ybar, Zbar = radical_data(C, D, E, theta, T)
    u1_fifth, u5, c1, A = assemble_root(Xp, Yw, Zw, Xbar, Ybar, Zbar, a1)
    logger.debug("Watson 파이프라인 계산 완료")
    return WatsonData(
        a1, C, D, E, F, K, L, M, delta, sqrt_delta, theta, T, R1, R2,
        Xp, Yw, Zw, Xbar, Ybar, Zbar, u1_fifth, u5, c1, *A,
    )  # fmt: skip


def compare_with_closed_forms(data=None):
    """
    Returns:
        {이름: None (일치) 또는 첫 번째로 다른 계수 설명}
    """
    data = run_pipeline() if data is None else data
    forms = closed_forms()
    report = {}
    for name, value in data.as_dict().items():
        report[name] = first_difference(value, forms[name])
    return report


def first_difference(got, want):
    """두 RatFunc 의 첫 번째 불일치 위치를 문자열로, 같으면 None"""
    if got == want:
        return None
    for part in ("num", "den"):
        p, q = getattr(got, part), getattr(want, part)
        for i in range(max(p.degree, q.degree) + 1):
            if p.coeff(i) != q.coeff(i):
                return f"{part} b^{i}: {p.coeff(i)} != {q.coeff(i)}"
    return "표준형 불일치"


def h_at_theta():
    """h(θ) (항등적으로 0 이어야 함)"""
    data = run_pipeline()
    _, _, _, _, _, h = resolvent(data.C, data.D, data.E, data.F)
    return h.evaluate(data.theta)


# ---- Q(α)(b)[u]/(u⁵ - u5) 연산 ----
def _kummer_mul(a, b, u5):
    out = [RF_ZERO] * 5
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            k = i + j
            term = x * y
            if k >= 5:
                out[k - 5] = out[k - 5] + term * u5
            else:
                out[k] = out[k] + term
    return out


def root_in_u(data=None):
    """X(u) 의 u⁰ … u⁴ 계수"""
    data = run_pipeline() if data is None else data
    return [K_SCALE * getattr(data, f"A{i}") for i in range(5)]


def expanded_display_mismatches(data=None):
    """파이프라인의 X(u) 계수와 전개 표시 K_SCALE·(A₀ … A₄) 가 다른 u 의 지수 목록"""
    coeffs = root_in_u(data)
    return [k for k, (got, shown) in enumerate(zip(coeffs, expanded_root_display())) if got != K_SCALE * shown]


def root_identity(alpha_sign=1):
    """
    g(X(u)) 를 u⁵ ↦ u5 로 줄인 결과의 u⁰ … u⁴ 계수 (모두 0 이어야 함).

    alpha_sign = -1 이면 g, X(u), u5 모두에 ζ ↦ ζ² 를 적용한 켤레 가지를 검사합니다.
    """
    data = run_pipeline()
    x_of_u = root_in_u(data)
    u5 = data.u5
    g = build_g(alpha_sign)
    if alpha_sign == -1:
        x_of_u = [c.conjugate(2) for c in x_of_u]
        u5 = u5.conjugate(2)
    acc = [RF_ZERO] * 5
    for c in reversed(g.coeffs):
        acc = _kummer_mul(acc, x_of_u, u5)
        acc[0] = acc[0] + c
    return acc


def eisenstein_check(f, pi):
    """
    f 의 최고차 아닌 계수가 모두 π 로 나누어떨어지고, 상수항이 π² 로는 나누어떨어지지 않으면 True.

    Args:
        f: x 에 대한 다항식. 계수는 b 의 다항식(UniPoly 또는 분모가 상수인 RatFunc)
        pi: b 의 다항식
    """
    if isinstance(pi, RatFunc):
        pi = pi.num

    def as_poly(c):
        if isinstance(c, RatFunc):
            if not c.is_polynomial():
                return None
            return c.num
        if isinstance(c, UniPoly):
            return c
        return UniPoly((c,), pi.var)

    coeffs = [as_poly(f.coeff(i)) for i in range(f.degree + 1)]
    if any(c is None for c in coeffs):
        return False
    *lower, lead = coeffs
    if pi.divides(lead):
        return False
    if not all(pi.divides(c) for c in lower):
        return False
    return not (pi * pi).divides(lower[0])


def depressed_quintic():
    g = build_g(1)
    f, *_ = depress(g)
    return f


def phi_of_b():
    """u⁵ = φ(b) = (2b+11+5α)/(-2b-11+5α)"""
    return closed_forms()["u5"]


def lagrange_resolvent(x_of_u, k):
    """
    (1/5)·Σᵢ ζ^(-ik)·X(ζⁱu). X 가 u 의 유리함수일 때 u^k 성분을 뽑아냅니다.
    """
    total = None
    for i in range(5):
        term = x_of_u.twist(i) * zeta_pow(-i * k)
        total = term if total is None else total + term
    return total * Fraction(1, 5)
