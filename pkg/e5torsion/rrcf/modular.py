"""
r(5τ) 로 나타낸 5-torsion 좌표와 모듈러 항등식 검증 모듈입니다.

## 주요 기능
- u_from_r: u = -(r - ε̄)/(r - ε) (수치, Q(ζ₅) 원소, r 의 유리함수 모두 지원)
- coords_from_r: (X, Y₁, Y₂, X(2P)) 를 r 의 유리함수로 (torsion 공식과 u_from_r 의 합성)
- building_blocks: (u - ζⁱ(1+ζ)²)/(u + ζʲ) 등 여섯 일차분수식의 r 표시
- ramanujan_identity / composition_identity 등: q-급수로 처음 N 개 계수 비교
- numeric_torsion_check: τ 에서 b = r(τ)⁵ 위의 점 (X, Y₁) 이 곡선 위에 있고 위수가 5 인지 수치 확인
- fricke_spot_check: r(-1/(5τ)) 에 대한 두 변환식과 u = 1/(ε·r(-1/(5τ))) 수치 확인
"""

from functools import lru_cache
import logging

from ..algebra.field import ALPHA, EPS, EPS_BAR, ETA, ZETA, CycloElement
from ..algebra.poly import UniPoly
from ..algebra.ratfunc import RatFunc
from ..curve.weierstrass import CurvePoint, tate5
from ..errors import PoleError
from ..torsion.formulas import build_formulas, minus_root, plus_zeta, sigma
from ..torsion.points import all_labels, point
from .numeric import TauPoint, r_eval
from .series import r5_series, r_series, series_identity, series_of


logger = logging.getLogger(__name__)

Z = ZETA


def rpoly(*coeffs):
    return UniPoly(coeffs, "r")


def r_rf(num, den=None):
    return RatFunc(num, rpoly(1) if den is None else den)


def minus(c):
    """r - c"""
    return rpoly(-c, 1)


R = RatFunc.gen("r")
# r⁴ - 3r³ + 4r² - 2r + 1 = ∏ (r - (1+ζᵏ))
Q1 = rpoly(1, -2, 4, -3, 1)
# r⁴ + 2r³ + 4r² + 3r + 1 = (r² + r + ε²)(r² + r + ε̄²)
Q2 = rpoly(1, 3, 4, 2, 1)
QUARTIC_ROOTS = (Z + Z**2, Z**2 + Z**4, Z**3 + Z**4, Z + Z**3)


def _complex(c, k=1):
    return complex(c.embed(k)) if isinstance(c, CycloElement) else complex(c)


def u_from_r(r5):
    """
    u = -(r - ε̄)/(r - ε)

    Args:
        r5: complex, CycloElement, 또는 r 의 RatFunc

    Raises:
        PoleError: r = ε
    """
    if isinstance(r5, RatFunc):
        return -(r5 - EPS_BAR) / (r5 - EPS)
    if isinstance(r5, (complex, float)):
        eps, eps_bar = _complex(EPS), _complex(EPS_BAR)
        if r5 == eps:
            raise PoleError("r(5τ) = ε 는 u 의 극점입니다.")
        return -(r5 - eps_bar) / (r5 - eps)
    r5 = r5 if isinstance(r5, CycloElement) else CycloElement(r5)
    if r5 == EPS:
        raise PoleError("r(5τ) = ε 는 u 의 극점입니다.")
    return -(r5 - EPS_BAR) / (r5 - EPS)


@lru_cache(maxsize=None)
def u_of_r():
    return u_from_r(R)


@lru_cache(maxsize=None)
def coords_symbolic():
    """(X, Y₁, Y₂, X(2P)) as RatFunc in r"""
    tf = build_formulas()
    u = u_of_r()
    return (
        tf.X_of_u.compose(u),
        tf.Y1_of_u.compose(u),
        tf.Y2_of_u.compose(u),
        sigma(tf.X_of_u).compose(u),
    )


def coords_from_r(r5):
    """r5 가 RatFunc 이면 기호적으로, 수이면 그 값에서 (X, Y₁, Y₂, X(2P))"""
    coords = coords_symbolic()
    if isinstance(r5, RatFunc):
        return tuple(f.compose(r5) for f in coords)
    return tuple(f.evaluate(r5) for f in coords)


# ---- r 로 적은 표시들 ----
def x_display():
    """X = (-ε/√5)·Q1/(r² + r + ε²)"""
    return r_rf(Q1.scale(-EPS / ALPHA), rpoly(EPS**2, 1, 1))


def x_product_display():
    num = minus(1 + Z) * minus(1 + Z**2) * minus(1 + Z**3) * minus(1 + Z**4)
    return r_rf(num.scale(-EPS / ALPHA), minus(Z + Z**3) * minus(Z**2 + Z**4))


def x2p_display_r():
    """(ε̄/√5)·Q1/(r² + r + ε̄²)"""
    return r_rf(Q1.scale(EPS_BAR / ALPHA), rpoly(EPS_BAR**2, 1, 1))


def x2p_product_display():
    num = minus(1 + Z) * minus(1 + Z**2) * minus(1 + Z**3) * minus(1 + Z**4)
    return r_rf(num.scale(EPS_BAR / ALPHA), minus(Z**3 + Z**4) * minus(Z + Z**2))


def z_factor():
    """Z = (r - (ζ³+ζ⁴)) / ((r - (ζ²+ζ⁴))(r - (1+ζ³)))"""
    return r_rf(minus(Z**3 + Z**4), minus(Z**2 + Z**4) * minus(1 + Z**3))


def y1_display():
    """Y₁ = η³·Q1²/Q2·Z"""
    return r_rf((Q1 * Q1).scale(ETA**3), Q2) * z_factor()


def y1_product_display():
    num = minus(1 + Z) ** 2 * minus(1 + Z**2) ** 2 * minus(1 + Z**3) * minus(1 + Z**4) ** 2
    den = minus(Z**2 + Z**4) ** 2 * minus(Z + Z**3) * minus(Z + Z**2)
    return r_rf(num.scale(ETA**3), den)


def y2_display():
    """Y₂ = ((ζ⁴-1)/√5)³·Q1²/Q2·Z^(σ²)"""
    z_sigma2 = r_rf(minus(Z + Z**2), minus(Z + Z**3) * minus(1 + Z**2))
    return r_rf((Q1 * Q1).scale(((Z**4 - 1) / ALPHA) ** 3), Q2) * z_sigma2


def building_blocks():
    """
    Returns:
        [(이름, u 의 유리함수, r 로 적은 표시)]
    """
    def uq(num, den):
        return RatFunc(num, den)

    one_zz = 1 + Z + Z**2
    return [
        (
            "(u-(1+ζ)²)/(u+1)",
            uq(minus_root(0), plus_zeta(0)),
            r_rf(minus(1 + Z**2).scale((1 + Z) * (1 - Z**3) / ALPHA)),
        ),
        (
            "(u-ζ(1+ζ)²)/(u+ζ)",
            uq(minus_root(1), plus_zeta(1)),
            r_rf(minus(1 + Z).scale(Z**2 * (1 + Z)), minus(-one_zz)),
        ),
        (
            "(u-ζ²(1+ζ)²)/(u+ζ²)",
            uq(minus_root(2), plus_zeta(2)),
            r_rf(minus(-Z * one_zz).scale(-Z), minus(Z**2 * (1 + Z**2))),
        ),
        (
            "(u-ζ³(1+ζ)²)/(u+ζ³)",
            uq(minus_root(3), plus_zeta(3)),
            r_rf(minus(1 + Z**3).scale(-Z * (1 + Z)), minus(Z * (1 + Z**2))),
        ),
        (
            "(u+ζ)/(u+1)",
            uq(plus_zeta(1), plus_zeta(0)),
            r_rf(minus(-one_zz).scale((1 - Z) / ALPHA)),
        ),
        (
            "(u+ζ)/(u+ζ⁴)",
            uq(plus_zeta(1), plus_zeta(4)),
            r_rf(minus(-one_zz).scale(-Z), minus(Z * (1 + Z))),
        ),
    ]


def building_block_check():
    u = u_of_r()
    failed = [name for name, f, display in building_blocks() if f.compose(u) != display]
    if failed:
        return False, "불일치: " + "; ".join(failed)
    return True, f"{len(building_blocks())}개 모두 일치"


def coordinate_display_check():
    """합성으로 얻은 좌표와 r 표시들의 정확한 비교"""
    X, Y1, Y2, X2P = coords_symbolic()
    pairs = [
        ("X = 이차 분모 표시", X, x_display()),
        ("X = 곱 표시", X, x_product_display()),
        ("X(2P) = 이차 분모 표시", X2P, x2p_display_r()),
        ("X(2P) = 곱 표시", X2P, x2p_product_display()),
        ("Y1 = Q1²/Q2 표시", Y1, y1_display()),
        ("Y1 = 곱 표시", Y1, y1_product_display()),
        ("Y2 = Q1²/Q2 표시", Y2, y2_display()),
    ]
    failed = [name for name, a, b in pairs if a != b]
    if failed:
        return False, "불일치: " + "; ".join(failed)
    return True, f"{len(pairs)}개 모두 일치"


def quartic_root_check():
    """ζ+ζ², ζ²+ζ⁴, ζ³+ζ⁴, ζ+ζ³ 가 Q2 의 근이고 Q2 = (r²+r+ε²)(r²+r+ε̄²)"""
    roots_ok = all(not Q2.evaluate(c) for c in QUARTIC_ROOTS)
    split_ok = Q2 == rpoly(EPS**2, 1, 1) * rpoly(EPS_BAR**2, 1, 1)
    return roots_ok and split_ok, f"근 {roots_ok}, 인수분해 {split_ok}"


def points_in_r_check():
    """
    20개 점을 r 의 함수로 옮기고, 켤레 가지는 u = -ζⁱ(r-ε)/(r-ε̄) 대입과 일치하는지 확인합니다.
    """
    tf = build_formulas()
    u = u_of_r()
    conj = {"Y1": tf.Y1_of_u.conjugate(2), "Y2": tf.Y2_of_u.conjugate(2)}
    x_conj = tf.X_of_u.conjugate(2)
    seen = set()
    for label in all_labels():
        X, Y = point(label)
        Xr, Yr = X.compose(u), Y.compose(u)
        seen.add((Xr, Yr))
        if label.branch == "conjugate":
            alt = -(R - EPS) / (R - EPS_BAR) * Z**label.i
            if x_conj.compose(alt) != Xr or conj[label.sign].compose(alt) != Yr:
                return False, f"{label}: 켤레 가지 대입식과 불일치"
    if len(seen) != 20:
        return False, f"서로 다른 점이 {len(seen)}개"
    return True, "r 의 함수로 서로 다른 점 20개"


# ---- q-급수 ----
def _series_pair(N):
    return r_series(N), r5_series(N)


def ramanujan_identity(N=60):
    """r⁵(τ)/r(5τ) = Q1(r(5τ))/Q2(r(5τ))"""
    r, r5 = _series_pair(N)
    lhs = r**5 / r5
    rhs = series_of(r_rf(Q1, Q2), r5)
    ok, detail = series_identity(lhs, rhs, N)
    if ok and lhs.coeff(0) != 1:
        return False, f"상수항 {lhs.coeff(0)} != 1"
    return ok, detail


def composition_identity(N=60):
    """b(u(r(5τ))) = r(τ)⁵"""
    r, r5 = _series_pair(N)
    b_of_r = build_formulas().b_of_u.compose(u_of_r())
    return series_identity(series_of(b_of_r, r5), r**5, N)


def kummer_series_identity(N=60):
    """u(r(5τ))⁵ = φ(r(τ)⁵)"""
    from ..watson.quintic import phi_of_b

    r, r5 = _series_pair(N)
    u5 = series_of(u_of_r(), r5) ** 5
    return series_identity(u5, series_of(phi_of_b(), r**5), N)


def alternative_x_identity(N=60):
    """
    X 와 X(2P) 의 두 번째 표시 (r⁵(τ)/r(5τ) 사용) 와 Y₁ 의 r⁵(τ)/r(5τ) 표시를 급수로 비교합니다.
    """
    r, r5 = _series_pair(N)
    ratio = r**5 / r5
    checks = [
        ("X", series_of(x_display(), r5), ratio * series_of(rpoly(EPS_BAR**2, 1, 1), r5) * (-EPS / ALPHA)),
        ("X(2P)", series_of(x2p_display_r(), r5), ratio * series_of(rpoly(EPS**2, 1, 1), r5) * (EPS_BAR / ALPHA)),
        ("Y1", series_of(y1_display(), r5), ratio * series_of(r_rf(Q1.scale(ETA**3)) * z_factor(), r5)),
    ]
    for name, lhs, rhs in checks:
        ok, detail = series_identity(lhs, rhs, N)
        if not ok:
            return False, f"{name}: {detail}"
    return True, None


# ---- 수치 ----
def _order5_residual(curve, P):
    """max(|X(4P) - X(-P)|, |Y(4P) - Y(-P)|)"""
    P4 = curve.double(curve.double(P))
    minus_P = curve.neg(P)
    if P4.is_infinity:
        return float("inf")
    return max(abs(P4.x - minus_P.x), abs(P4.y - minus_P.y))


def _doubling_residual(curve, P, x2p):
    """군 연산으로 구한 X(2P) 와 r(5τ) 표시 값의 상대 차이"""
    P2 = curve.double(P)
    if P2.is_infinity:
        return float("inf")
    return abs(P2.x - x2p) / max(1.0, abs(x2p))


def numeric_torsion_check(tau, tol=1e-9):
    """
    b = r(τ)⁵ 위의 점 P = (X, Y₁) (X, Y₁ 은 r(5τ) 로 계산) 에 대해 곡선 방정식, 5P = O,
    P ∉ ⟨(0,0)⟩ 를 수치로 확인합니다.

    Returns:
        dict: tau, r, r5, b, u, X, Y1, Y2, X2P, residuals, passed
    """
    if not isinstance(tau, TauPoint):
        tau = TauPoint.from_complex(tau)
    r = r_eval(tau, tol=tol * 1e-3)
    r5 = r_eval(tau.scaled(5), tol=tol * 1e-3)
    b = r**5
    u = u_from_r(r5)
    X, Y1, Y2, X2P = coords_from_r(r5)
    curve = tate5(b, tol=tol, check=False)
    P = CurvePoint(X, Y1)
    b_from_u = build_formulas().b_of_u.evaluate(u)
    residuals = {
        "curve_Y1": abs(curve.residual(P)),
        "curve_Y2": abs(curve.residual(CurvePoint(X, Y2))),
        "order5": _order5_residual(curve, P),
        "b_of_u": abs(b_from_u - b),
        "x2p_doubling": _doubling_residual(curve, P, x2p_display_r().evaluate(r5)),
    }
    five = curve.mul(5, P)
    outside = abs(X) > tol and abs(X + b) > tol
    passed = all(v < tol for v in residuals.values()) and five.is_infinity and outside
    logger.debug(f"τ = {tau}: residuals = {residuals}")
    return {
        "tau": tau,
        "r": r,
        "r5": r5,
        "b": b,
        "u": u,
        "X": X,
        "Y1": Y1,
        "Y2": Y2,
        "X2P": X2P,
        "residuals": residuals,
        "five_is_infinity": five.is_infinity,
        "outside_origin_subgroup": outside,
        "passed": passed,
    }


def fricke_spot_check(tau, tol=1e-9):
    """
    r(-1/(5τ)) = (ε̄r(5τ) + 1)/(r(5τ) - ε̄), r⁵(-1/(5τ)) = (-r⁵(τ) + ε⁵)/(ε⁵r⁵(τ) + 1),
    u = 1/(ε·r(-1/(5τ))) 의 수치 잔차

    Returns:
        {이름: 잔차}
    """
    if not isinstance(tau, TauPoint):
        tau = TauPoint.from_complex(tau)
    eps, eps_bar = _complex(EPS), _complex(EPS_BAR)
    r = r_eval(tau, tol=tol * 1e-3)
    r5 = r_eval(tau.scaled(5), tol=tol * 1e-3)
    rf = r_eval(tau.fricke5(), tol=tol * 1e-3)
    return {
        "r(-1/5τ)": abs(rf - (eps_bar * r5 + 1) / (r5 - eps_bar)),
        "r^5(-1/5τ)": abs(rf**5 - (-(r**5) + eps**5) / (eps**5 * r**5 + 1)),
        "u": abs(1 / (eps * rf) - u_from_r(r5)),
    }


def coherence_residual(tau, tol=1e-9):
    """r 의 유리함수로 얻은 좌표와 u 를 거쳐 직접 계산한 좌표의 차이"""
    if not isinstance(tau, TauPoint):
        tau = TauPoint.from_complex(tau)
    r5 = r_eval(tau.scaled(5), tol=tol * 1e-3)
    u = u_from_r(r5)
    tf = build_formulas()
    direct = (
        tf.X_of_u.evaluate(u),
        tf.Y1_of_u.evaluate(u),
        tf.Y2_of_u.evaluate(u),
        sigma(tf.X_of_u).evaluate(u),
    )
    return max(abs(a - b) for a, b in zip(coords_from_r(r5), direct))

