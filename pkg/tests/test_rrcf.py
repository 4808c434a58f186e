from fractions import Fraction

import pytest

from e5torsion.algebra.field import EPS
from e5torsion.errors import ConvergenceError, InsufficientPrecisionError, PoleError
from e5torsion.rrcf import modular
from e5torsion.rrcf.numeric import TauPoint, cf_eval, r_eval
from e5torsion.rrcf.series import PuiseuxSeries, r5_series, r_series, series_identity, series_of
from e5torsion.suites import DEFAULT_TAUS


TAUS = [TauPoint(re, im) for re, im in DEFAULT_TAUS]


def test_r_series_head():
    s = r_series(25)
    assert s.valuation == 1
    assert [s.coeff(e) for e in (1, 6, 11, 16, 21)] == [1, -1, 1, 0, -1]
    assert s.leading_exponent == Fraction(1, 5)
    with pytest.raises(InsufficientPrecisionError):
        r_series(10).coeff(11)
    with pytest.raises(ValueError):
        r_series(0)


def test_r5_series():
    s5 = r5_series(10)
    assert s5.valuation == 5
    assert s5.coeff(30) == -1
    assert s5.coeff(31) == 0


def test_series_arithmetic():
    s = r_series(20)
    p = s * s.inverse()
    assert p.coeff(0) == 1
    assert all(p.coeff(e) == 0 for e in range(1, 11))
    t = PuiseuxSeries.gen(10)
    assert series_identity((t + 1) * (1 - t), 1 - t * t, 10) == (True, None)
    assert (t**3).valuation == 3
    with pytest.raises(PoleError):
        t / 0


def test_series_identity_precision():
    s = r_series(5)
    with pytest.raises(InsufficientPrecisionError):
        series_identity(s, s, 10)
    ok, detail = series_identity(s, s, 5)
    assert ok and detail is None
    ok, detail = series_identity(s, s + PuiseuxSeries([1], 3, 6), 5)
    assert not ok
    assert detail.startswith("t^3")


def test_series_of_rational_function():
    s = r_series(20)
    f = modular.R**2 + 1
    assert series_identity(series_of(f, s), s * s + 1, 15)[0]


@pytest.mark.parametrize(
    "identity",
    [
        modular.ramanujan_identity,
        modular.composition_identity,
        modular.kummer_series_identity,
        modular.alternative_x_identity,
    ],
)
def test_series_identities(identity):
    ok, detail = identity(30)
    assert ok, detail


@pytest.mark.parametrize(
    "check",
    [
        modular.building_block_check,
        modular.coordinate_display_check,
        modular.quartic_root_check,
        modular.points_in_r_check,
    ],
)
def test_exact_r_checks(check):
    ok, detail = check()
    assert ok, detail


def test_tau_point():
    with pytest.raises(ValueError):
        TauPoint(0.0, -1.0)
    with pytest.raises(ValueError):
        TauPoint(0.0, 0.0)
    tau = TauPoint(0.0, 1.0)
    assert tau.scaled(5) == TauPoint(0.0, 5.0)
    assert tau.fricke5().value == pytest.approx(0.2j)


def test_r_eval():
    assert r_eval(TauPoint(0.0, 1.0)) == pytest.approx(0.2840790438, abs=1e-7)
    assert r_eval(TauPoint(0.0, 5.0)) == pytest.approx(0.0018674427, abs=1e-9)
    assert r_eval(1j) ** 5 == pytest.approx(0.00185010, abs=1e-8)
    with pytest.raises(ConvergenceError):
        r_eval(TauPoint(0.0, 0.001), max_terms=100)


@pytest.mark.parametrize("tau", TAUS)
def test_continued_fraction_matches_product(tau):
    assert abs(cf_eval(tau) - r_eval(tau)) < 1e-9


@pytest.mark.parametrize("tau", TAUS)
def test_numeric_torsion(tau):
    result = modular.numeric_torsion_check(tau, 1e-9)
    assert result["passed"], result["residuals"]
    assert result["five_is_infinity"]
    assert result["outside_origin_subgroup"]


def test_numeric_torsion_at_i():
    result = modular.numeric_torsion_check(TauPoint(0.0, 1.0), 1e-9)
    assert result["r"] == pytest.approx(0.2840790438, abs=1e-7)
    assert result["b"] == pytest.approx(0.00185010, abs=1e-8)
    assert result["residuals"]["curve_Y1"] < 1e-9
    assert result["residuals"]["order5"] < 1e-9


@pytest.mark.parametrize("tau", TAUS)
def test_fricke_and_coherence(tau):
    assert max(modular.fricke_spot_check(tau).values()) < 1e-9
    assert modular.coherence_residual(tau) < 1e-9


def test_u_from_r():
    with pytest.raises(PoleError):
        modular.u_from_r(EPS)
    u = modular.u_from_r(0.1 + 0.05j)
    assert isinstance(u, complex)


@pytest.mark.parametrize("n", [10, 25])
def test_truncated_series_matches_shorter(n):
    long = r_series(2 * n).truncate(n + 1)
    assert long.precision == r_series(n).precision == n + 1
    assert series_identity(r_series(n), long, n) == (True, None)
    with pytest.raises(InsufficientPrecisionError):
        long.coeff(n + 1)


def test_doubling_residual_uses_group_law():
    result = modular.numeric_torsion_check(TauPoint(0.3, 0.9), 1e-9)
    assert "x2p_doubling" in result["residuals"]
    assert "x_display" not in result["residuals"]
    assert result["residuals"]["x2p_doubling"] < 1e-9
