"""
검증 모음(suite) 등록 및 실행 모듈입니다.

## 주요 기능
- VerifyOptions: 급수 항 수, 허용오차, τ 표본, 곱 절단 상한, 시드, 시간 기록 여부
- register: 검사 함수를 (suite, id, anchor) 로 등록
- run_suite: 등록 순서대로 검사를 실행 (jobs > 1 이면 ProcessPoolExecutor, 출력 순서는 항상 등록 순서)

검사 함수는 (통과 여부, 설명) 을 돌려주며, 예외는 실행기에서 fail 결과로 바뀝니다.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import logging
import math
import os
import random
import time

from tqdm import tqdm

from .algebra.field import ALPHA, EPS, EPS_BAR, ETA, ONE, ZETA, CycloElement, qa
from .algebra.poly import UniPoly
from .algebra.ratfunc import RatFunc
from .algebra.serialize import parse_ratfunc, ratfunc_to_str
from .curve.division import compare_with_display
from .curve.eprime import eprime_double, from_eprime, to_eprime
from .curve.weierstrass import CurvePoint, origin_subgroup, tate5, tate5_discriminant
from .errors import InsufficientPrecisionError
from .rrcf import modular
from .rrcf.numeric import TauPoint, cf_eval, r_eval
from .rrcf.series import r_series
from .torsion import checks as torsion_checks
from .torsion.formulas import build_formulas
from .utils.report import CheckResult
from .watson.closed_forms import K_SCALE, a_coefficients
from .watson.quintic import (
    build_g,
    compare_with_closed_forms,
    depressed_quintic,
    eisenstein_check,
    expanded_display_mismatches,
    factorization_check,
    h_at_theta,
    lagrange_resolvent,
    phi_of_b,
    root_identity,
    root_in_u,
    run_pipeline,
)


logger = logging.getLogger(__name__)

SUITE_ORDER = ("field", "curve", "watson", "torsion", "qseries")
DEFAULT_TAUS = ((0.0, 1.0), (1 / 3, 2 / 3), (0.3, 0.9), (-0.2, 0.8), (0.1, 1.3))


@dataclass(frozen=True)
class VerifyOptions:
    terms: int = 60
    tol: float = 1e-9
    taus: tuple = DEFAULT_TAUS
    max_terms: int = 2000
    seed: int = 456
    timing: bool = False


@dataclass(frozen=True)
class Check:
    suite: str
    id: str
    anchor: str
    fn: object = field(repr=False)


REGISTRY = {suite: {} for suite in SUITE_ORDER}


def register(suite, check_id, anchor):
    def wrapper(fn):
        if check_id in REGISTRY[suite]:
            raise ValueError(f"{suite}/{check_id} 가 이미 등록되어 있습니다.")
        REGISTRY[suite][check_id] = Check(suite, check_id, anchor, fn)
        return fn

    return wrapper


def suite_names():
    return SUITE_ORDER + ("all",)


def checks_for(suite):
    if suite == "all":
        return [c for name in SUITE_ORDER for c in REGISTRY[name].values()]
    if suite not in REGISTRY:
        raise KeyError(suite)
    return list(REGISTRY[suite].values())


def _all_equal(pairs):
    failed = [name for name, lhs, rhs in pairs if lhs != rhs]
    if failed:
        return False, "불일치: " + "; ".join(failed)
    return True, f"{len(pairs)}개 모두 일치"


def _rng(opts):
    return random.Random(opts.seed)


def _nonzero(rng):
    while True:
        c = CycloElement.random(rng)
        if c:
            return c


def _random_ratfunc(rng):
    num = UniPoly([CycloElement.random(rng) for _ in range(3)], "u")
    den = UniPoly([_nonzero(rng) for _ in range(2)], "u")
    return RatFunc(num, den)


# ---- field ----
@register("field", "constants", "Q(ζ₅) constants α, ε, ε̄, η")
def field_constants(opts):
    z = ZETA
    return _all_equal(
        [
            ("ζ⁵ = 1", z**5, ONE),
            ("ζ·ζ⁴ = 1", z * z**4, ONE),
            ("1+ζ+ζ²+ζ³+ζ⁴ = 0", 1 + z + z**2 + z**3 + z**4, 0),
            ("α² = 5", ALPHA * ALPHA, 5),
            ("ε = (-1+α)/2", EPS, (ALPHA - 1) / 2),
            ("ε + ε̄ = -1", EPS + EPS_BAR, -1),
            ("ε·ε̄ = -1", EPS * EPS_BAR, -1),
            ("1/ε = -ε̄", 1 / EPS, -EPS_BAR),
            ("ε⁵ = (-11+5α)/2", EPS**5, qa(-11, 5) / 2),
            ("αη = ζ - 1", ALPHA * ETA, z - 1),
        ]
    )


@register("field", "field-axioms", "Q(ζ₅) arithmetic")
def field_axioms(opts):
    rng = _rng(opts)
    for n in range(50):
        a, b, c = (CycloElement.random(rng) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            return False, f"표본 {n}: 결합/분배법칙 실패"
        d = _nonzero(rng)
        if d * d.inverse() != 1:
            return False, f"표본 {n}: 역원 실패 ({d})"
    return True, "표본 50개"


@register("field", "galois", "ζ ↦ ζᵏ automorphisms")
def galois_action(opts):
    rng = _rng(opts)
    orbit = [ALPHA.conjugate(k) for k in range(1, 5)]
    if orbit != [ALPHA, -ALPHA, -ALPHA, ALPHA]:
        return False, f"α 의 궤도 {orbit}"
    if EPS.conjugate(2) != EPS_BAR or EPS.conjugate(4) != EPS:
        return False, "ε 의 켤레 불일치"
    for n in range(30):
        a, b = CycloElement.random(rng), CycloElement.random(rng)
        for k in range(1, 5):
            if (a * b).conjugate(k) != a.conjugate(k) * b.conjugate(k):
                return False, f"표본 {n}: k = {k} 곱셈 보존 실패"
            if (a + b).conjugate(k) != a.conjugate(k) + b.conjugate(k):
                return False, f"표본 {n}: k = {k} 덧셈 보존 실패"
            for m in range(1, 5):
                if a.conjugate(m).conjugate(k) != a.conjugate(k * m % 5):
                    return False, f"표본 {n}: σ_{k}σ_{m} != σ_{k * m % 5}"
    return True, "표본 30개, k = 1 … 4"


@register("field", "norm", "norm N(Q(ζ₅)/Q)")
def norm_multiplicative(opts):
    rng = _rng(opts)
    if (1 + ZETA).norm() != 1 or ZETA.norm() != 1 or CycloElement(2).norm() != 16:
        return False, "N(1+ζ), N(ζ), N(2) 불일치"
    for n in range(100):
        a, b = CycloElement.random(rng), CycloElement.random(rng)
        if (a * b).norm() != a.norm() * b.norm():
            return False, f"표본 {n}: N(ab) != N(a)N(b)"
    return True, "표본 100개"


@register("field", "embedding", "complex embeddings ζ ↦ exp(2πik/5)")
def embeddings(opts):
    checks = [
        ("α ↦ √5", complex(ALPHA.embed(1)), math.sqrt(5)),
        ("ε ↦ (√5-1)/2", complex(EPS.embed(1)), (math.sqrt(5) - 1) / 2),
        ("|ζ| = 1", abs(ZETA.embed(1)), 1.0),
    ]
    bad = [name for name, got, want in checks if abs(got - want) > 1e-12]
    if bad:
        return False, "; ".join(bad)
    rng = _rng(opts)
    worst = 0.0
    for _ in range(30):
        a = CycloElement.random(rng)
        for k in range(1, 5):
            want = complex(a.embed(k))
            worst = max(worst, abs(complex(a.conjugate(k).embed(1)) - want) / max(1.0, abs(want)))
    return worst < 1e-12, f"embed(σ_k a, 1) 와 embed(a, k) 의 최대 상대오차 {worst:.2e}"


@register("field", "units", "zeros and poles are units")
def units(opts):
    return torsion_checks.unit_check()


@register("field", "scalar-identities", "Q(ζ₅) scalar identities")
def scalar_identities(opts):
    return torsion_checks.scalar_identity_check()


@register("field", "substitutions", "u ↦ ζⁱu, u ↦ 1/u, Möbius, coefficient Galois")
def substitutions(opts):
    rng = _rng(opts)
    u = RatFunc.gen("u")
    b = build_formulas().b_of_u
    f = _random_ratfunc(rng)
    g = _random_ratfunc(rng)
    twisted = f
    for _ in range(5):
        twisted = twisted.twist(1)
    pairs = [
        ("u⁵ ↦ 1/u⁵", (u**5).invert(), 1 / u**5),
        ("f(1/(1/u)) = f", f.invert().invert(), f),
        ("f(ζ⁵u) = f", twisted, f),
        ("b(ζu) = b(u)", b.twist(1), b),
        ("(u-ε)/(u-ε̄) ↦ (1-εu)/(1-ε̄u)", ((u - EPS) / (u - EPS_BAR)).invert(), (1 - EPS * u) / (1 - EPS_BAR * u)),
        ("σ₂σ₃ = 1", f.conjugate(3).conjugate(2), f),
        ("σ₂(fg) = σ₂f·σ₂g", (f * g).conjugate(2), f.conjugate(2) * g.conjugate(2)),
        ("σ₂(f+g) = σ₂f+σ₂g", (f + g).conjugate(2), f.conjugate(2) + g.conjugate(2)),
        ("직렬화 왕복", parse_ratfunc(ratfunc_to_str(build_formulas().X_of_u), "u"), build_formulas().X_of_u),
    ]
    ok, detail = _all_equal(pairs)
    if not ok:
        return ok, detail
    u5 = u**5
    for n in range(20):
        a, bb, c, d = (_nonzero(rng) for _ in range(4))
        if a * d == bb * c:
            continue
        x = _nonzero(rng)
        if not (c * x + d):
            continue
        if u5.moebius(a, bb, c, d).evaluate(x) != u5.evaluate((a * x + bb) / (c * x + d)):
            return False, f"표본 {n}: Möbius 합성 후 값 불일치"
    return True, f"{len(pairs)}개 항등식 + Möbius 표본 20개"


# ---- curve ----
@register("curve", "d5-display", "5-division polynomial D₅")
def d5_display(opts):
    mismatches = compare_with_display()
    if mismatches:
        i, got, want = mismatches[0]
        return False, f"x^{i} 계수 {len(mismatches)}곳 불일치, 첫 번째: {got} != {want}"
    return True, "x⁰ … x¹⁰ 계수 모두 일치"


@register("curve", "discriminant", "discriminant of E₅(b)")
def discriminant(opts):
    want = UniPoly((0, 0, 0, 0, 0, 1, -11, -1), "b")
    got = tate5_discriminant()
    return got == want, f"Δ = {got}"


@register("curve", "tate5-coefficients", "Tate normal form E₅(b)")
def tate5_coefficients(opts):
    coeffs = tate5(1).coefficients
    return tuple(coeffs) == (2, 1, 1, 0, 0), f"E₅(1) = {list(coeffs)}"


@register("curve", "origin-subgroup", "⟨(0,0)⟩ of order 5")
def origin_points(opts):
    b = RatFunc.gen("b")
    curve = tate5(b)
    pts = origin_subgroup(b)
    P = pts[1]
    multiples = [curve.mul(k, P) for k in range(5)]
    if not all(any(curve.equal(Q, M) for M in multiples) for Q in pts):
        return False, "(0,0) 의 배수들이 ⟨(0,0)⟩ 목록과 다릅니다."
    for Q in pts[1:]:
        if not curve.is_on_curve(Q) or curve.order(Q, bound=5) != 5:
            return False, f"{Q} 의 위수가 5 가 아닙니다."
    return True, "O 를 제외한 4개 점 모두 위수 5"


@register("curve", "eprime-doubling", "doubling on the isomorphic curve E′")
def eprime_doubling(opts):
    b = RatFunc.gen("b")
    curve = tate5(b)
    pts = origin_subgroup(b)[1:]
    for P in pts:
        X, Yp = to_eprime(b, P)
        X2, Y2p = eprime_double(b, X, Yp)
        if not curve.equal(from_eprime(b, CurvePoint(X2, Y2p)), curve.double(P)):
            return False, f"{P}: E′ 두 배 공식과 일반 군 연산 불일치"
    return True, f"{len(pts)}개 점에서 일치"


# ---- watson ----
@register("watson", "factorization", "5·g·g^σ = D₅")
def watson_factorization(opts):
    g = build_g(1)
    if g.degree != 5 or g.lc != 1:
        return False, "g 가 모닉 오차다항식이 아닙니다."
    return factorization_check(), "5·g(X)·g^σ(X) 와 D₅ 비교"


@register("watson", "closed-forms", "Watson pipeline closed forms")
def watson_closed_forms(opts):
    report = compare_with_closed_forms()
    bad = {name: diff for name, diff in report.items() if diff is not None}
    if bad:
        return False, "; ".join(f"{name}: {diff}" for name, diff in bad.items())
    return True, f"{len(report)}개 양 모두 일치"


@register("watson", "sqrt-delta", "√δ² = δ")
def watson_sqrt_delta(opts):
    data = run_pipeline()
    return data.sqrt_delta**2 == data.delta, "√δ² 와 판별식 δ 비교"


@register("watson", "theta", "h(θ) = 0")
def watson_theta(opts):
    value = h_at_theta()
    return not value, None if not value else f"h(θ) = {value}"


@register("watson", "radicals", "R₁, R₂ and the u₁⁵ radicand")
def watson_radicals(opts):
    d = run_pipeline()
    return _all_equal(
        [
            ("R₁² = (D-T)² + 4(C-θ)²(C+θ)", d.R1**2, (d.D - d.T) ** 2 + 4 * (d.C - d.theta) ** 2 * (d.C + d.theta)),
            (
                "R₁R₂θ",
                d.R1 * d.R2 * d.theta,
                d.C * (d.D**2 - d.T**2) + (d.C**2 - d.theta**2) * (d.C**2 + 3 * d.theta**2 - d.E),
            ),
            ("u₁⁵ = X′²Y/Z²", d.u1_fifth, d.Xp**2 * d.Yw / d.Zw**2),
            ("u₁⁵ = c₁⁵·φ(b)", d.u1_fifth, d.c1**5 * phi_of_b()),
        ]
    )


@register("watson", "root-identity", "g(X(u)) = 0 modulo u⁵ = φ(b)")
def watson_root_identity(opts):
    for sign in (1, -1):
        residue = root_identity(sign)
        nonzero = [i for i, c in enumerate(residue) if c]
        if nonzero:
            return False, f"α 부호 {sign:+d}: u^{nonzero[0]} 계수가 0 이 아닙니다."
    return True, "두 가지 모두 u⁰ … u⁴ 계수가 0"


@register("watson", "eisenstein", "irreducibility over Q(α, b)")
def watson_eisenstein(opts):
    pi = UniPoly((qa(-11, 5), -2), "b")
    return eisenstein_check(depressed_quintic(), pi), "π = -2b-11+5α"


@register("watson", "kummer", "Kummer element u⁵ = φ(b)")
def watson_kummer(opts):
    u = RatFunc.gen("u")
    tf = build_formulas()
    if phi_of_b().compose(tf.b_of_u) != u**5:
        return False, "φ(b(u)) != u⁵"
    coeffs = a_coefficients()
    if not coeffs["A1"]:
        return False, "A₁ = 0"
    for k in range(5):
        want = K_SCALE * coeffs[f"A{k}"].compose(tf.b_of_u) * u**k
        if lagrange_resolvent(tf.X_of_u, k) != want:
            return False, f"k = {k}: 라그랑주 분해식이 u^{k} 성분과 다릅니다."
    return True, "φ(b(u)) = u⁵, 라그랑주 분해식 k = 0 … 4 일치, A₁ ≠ 0"


@register("watson", "root-in-u", "Watson root equals the torsion X(u)")
def watson_root_in_u(opts):
    u = RatFunc.gen("u")
    tf = build_formulas()
    total = None
    for k, c in enumerate(root_in_u()):
        term = c.compose(tf.b_of_u) * u**k
        total = term if total is None else total + term
    return total == tf.X_of_u, "b = b(u) 대입 후 X(u) 비교"


@register("watson", "expanded-display", "X = ((5-α)/100)·(A₄u⁴ + … + A₀) expanded in b")
def watson_expanded_display(opts):
    bad = expanded_display_mismatches()
    if bad:
        return False, "다른 계수: " + ", ".join(f"u^{k}" for k in bad)
    return True, "u⁰ … u⁴ 계수 모두 일치"


# ---- torsion ----
def _torsion(fn):
    def run(opts):
        return fn()

    return run


for _id, _anchor, _fn in (
    ("b-factorization", "b(u) over Q(ζ₅)", torsion_checks.b_factorization_check),
    ("x-forms", "X(u) forms", torsion_checks.x_forms_check),
    ("curve-membership", "(X, Y₁), (X, Y₂) on E₅(b(u))", torsion_checks.curve_membership_check),
    ("vieta", "AY² + BY + C", torsion_checks.vieta_check),
    ("discriminant", "discriminant of AY² + BY + C", torsion_checks.discriminant_check),
    ("lemmas", "factorization lemmas", torsion_checks.lemma_check),
    ("census", "20 points outside ⟨(0,0)⟩", torsion_checks.census_check),
    ("d5-roots", "X functions are roots of D₅", torsion_checks.d5_root_check),
    ("pole-sets", "pole sets of X functions", torsion_checks.pole_disjointness_check),
):
    register("torsion", _id, _anchor)(_torsion(_fn))


def _aggregate(entries):
    failed = [f"{i}: {detail}" for i, ok, detail in entries if not ok]
    if failed:
        return False, "; ".join(failed)
    return True, "; ".join(f"{i}" + (f" ({detail})" if detail else "") for i, _, detail in entries)


@register("torsion", "order5", "4P = -P, i.e. 5P = O")
def torsion_order5(opts):
    return _aggregate(torsion_checks.verify_order5())


@register("torsion", "doubling", "X(2P) is the σ-image of X(P)")
def torsion_doubling(opts):
    return _aggregate(torsion_checks.verify_doubling())


# ---- qseries ----
@register("qseries", "r-series-head", "product expansion of r(τ)")
def r_series_head(opts):
    s = r_series(25)
    want = {1: 1, 6: -1, 11: 1, 16: 0, 21: -1}
    got = {e: s.coeff(e) for e in want}
    return got == want, f"t^e 계수 {got}"


@register("qseries", "ramanujan", "r⁵(τ)/r(5τ) as a rational function of r(5τ)")
def qseries_ramanujan(opts):
    return modular.ramanujan_identity(opts.terms)


@register("qseries", "composition", "b(u(r(5τ))) = r⁵(τ)")
def qseries_composition(opts):
    return modular.composition_identity(opts.terms)


@register("qseries", "kummer-series", "u(r(5τ))⁵ = φ(r⁵(τ))")
def qseries_kummer(opts):
    return modular.kummer_series_identity(opts.terms)


@register("qseries", "alternative-forms", "X, X(2P), Y₁ through r⁵(τ)/r(5τ)")
def qseries_alternative(opts):
    return modular.alternative_x_identity(opts.terms)


@register("qseries", "building-blocks", "linear fractional building blocks in r")
def qseries_building_blocks(opts):
    return modular.building_block_check()


@register("qseries", "coordinate-displays", "X, X(2P), Y₁, Y₂ in r(5τ)")
def qseries_coordinates(opts):
    return modular.coordinate_display_check()


@register("qseries", "quartic-roots", "roots of x⁴+2x³+4x²+3x+1")
def qseries_quartic(opts):
    return modular.quartic_root_check()


@register("qseries", "points-in-r", "20 points as functions of r(5τ)")
def qseries_points(opts):
    return modular.points_in_r_check()


def _taus(opts):
    return [TauPoint(re, im) for re, im in opts.taus]


@register("qseries", "numeric-torsion", "(X, Y₁) from r(5τ) is 5-torsion on E₅(r⁵(τ))")
def qseries_numeric_torsion(opts):
    taus = _taus(opts)
    if not taus:
        return None, "τ 표본이 없습니다."
    worst = 0.0
    for tau in taus:
        result = modular.numeric_torsion_check(tau, opts.tol)
        worst = max(worst, *result["residuals"].values())
        if not result["passed"]:
            return False, f"τ = {tau}: 잔차 {result['residuals']}"
    return True, f"τ {len(taus)}개, 최대 잔차 {worst:.2e}"


@register("qseries", "fricke", "r(-1/(5τ)) and u = 1/(ε r(-1/(5τ)))")
def qseries_fricke(opts):
    taus = _taus(opts)
    if not taus:
        return None, "τ 표본이 없습니다."
    worst = 0.0
    for tau in taus:
        residuals = modular.fricke_spot_check(tau, opts.tol)
        worst = max(worst, *residuals.values())
        if any(v > opts.tol for v in residuals.values()):
            return False, f"τ = {tau}: 잔차 {residuals}"
    return True, f"τ {len(taus)}개, 최대 잔차 {worst:.2e}"


@register("qseries", "coherence", "symbolic coordinates against direct evaluation")
def qseries_coherence(opts):
    taus = _taus(opts)
    if not taus:
        return None, "τ 표본이 없습니다."
    worst = max(modular.coherence_residual(tau, opts.tol) for tau in taus)
    return worst < opts.tol, f"τ {len(taus)}개, 최대 차이 {worst:.2e}"


@register("qseries", "continued-fraction", "continued fraction against the product")
def qseries_continued_fraction(opts):
    taus = _taus(opts)
    if not taus:
        return None, "τ 표본이 없습니다."
    worst = 0.0
    for tau in taus:
        worst = max(worst, abs(cf_eval(tau) - r_eval(tau, tol=opts.tol * 1e-3, max_terms=opts.max_terms)))
    return worst < opts.tol, f"τ {len(taus)}개, 최대 차이 {worst:.2e}"


# ---- 실행 ----
def run_check(task):
    """(suite, id, opts) 하나를 실행해 CheckResult 로 돌려줍니다. 예외는 fail 로 기록합니다."""
    suite, check_id, opts = task
    check = REGISTRY[suite][check_id]
    start = time.perf_counter()
    try:
        ok, detail = check.fn(opts)
        status = "skipped" if ok is None else ("pass" if ok else "fail")
    except InsufficientPrecisionError as e:
        logger.error(f"{suite}/{check_id}: 급수 정밀도 부족 - {e}")
        status, detail = "fail", f"{type(e).__name__}: {e}"
    except Exception as e:
        logger.error(f"{suite}/{check_id} 실행 중 오류 발생: {e}")
        status, detail = "fail", f"{type(e).__name__}: {e}"
    ms = round((time.perf_counter() - start) * 1000) if opts.timing else 0
    if status == "fail":
        logger.warning(f"{suite}/{check_id} 실패: {detail}")
    else:
        logger.debug(f"{suite}/{check_id}: {status}")
    return CheckResult(suite, check_id, check.anchor, status, None if detail is None else str(detail), ms)


def run_suite(suite, opts=None, jobs=1, progress=True):
    """
    Args:
        suite: SUITE_ORDER 의 이름 또는 "all"
        jobs: 0 이면 CPU 개수, 1 이면 현재 프로세스에서 순서대로 실행

    Returns:
        등록 순서의 CheckResult 목록
    """
    opts = VerifyOptions() if opts is None else opts
    tasks = [(c.suite, c.id, opts) for c in checks_for(suite)]
    if jobs == 0:
        jobs = os.cpu_count() or 1
    desc = f"verify {suite}"
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(tqdm(pool.map(run_check, tasks), total=len(tasks), desc=desc, disable=not progress))
    else:
        results = [run_check(task) for task in tqdm(tasks, desc=desc, disable=not progress)]
    logger.info(f"{desc}: {sum(r.status == 'pass' for r in results)}/{len(results)} 통과")
    return results
