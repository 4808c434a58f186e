"""
E₅(b) 와 동형인 곡선 E′ 위의 두 배 공식.

E′: Y′² = X³ + (b²+6b+1)/4·X² + b(b+1)/2·X + b²/4,  Y′ = Y + (1+b)X/2 + b/2
"""

from fractions import Fraction

from ..errors import PoleError
from .weierstrass import CurvePoint, WeierstrassCurve


def _b(b):
    return Fraction(b) if isinstance(b, int) else b


def eprime_coefficients(b):
    b = _b(b)
    return (b * b + 6 * b + 1) / 4, b * (b + 1) / 2, b * b / 4


def eprime_curve(b, tol=None):
    a2, a4, a6 = eprime_coefficients(b)
    return WeierstrassCurve(0, a2, 0, a4, a6, tol=tol)


def to_eprime(b, P):
    """E₅(b) 의 점을 E′ 의 점으로"""
    if P.is_infinity:
        return P
    b = _b(b)
    return CurvePoint(P.x, P.y + (1 + b) * P.x / 2 + b / 2)


def from_eprime(b, P):
    if P.is_infinity:
        return P
    b = _b(b)
    return CurvePoint(P.x, P.y - (1 + b) * P.x / 2 - b / 2)


def p_of_x(b, X):
    """p(X) = X³ + a2X² + a4X + a6 (= Y′²)"""
    a2, a4, a6 = eprime_coefficients(b)
    return X * X * X + a2 * X * X + a4 * X + a6


def n_of_x(b, X):
    """Y′(2P) 공식의 분자 N(X)"""
    b = _b(b)
    b2, b3 = b * b, b * b * b
    b4, b5 = b3 * b, b3 * b2
    X2 = X * X
    X3 = X2 * X
    return (
        2 * X3 * X3
        + (b2 + 6 * b + 1) * X3 * X2
        + (5 * b2 + 5 * b) * X2 * X2
        + 10 * b2 * X3
        + 10 * b3 * X2
        + (b5 + 5 * b4) * X
        + b5
    )


def eprime_double(b, X, Yp):
    """
    E′ 위에서 (X, Y′) 의 두 배.

    X(2P)  = (X⁴ - (b²+b)X² - 2b²X - b³) / (4p(X))
    Y′(2P) = N(X)·Y′ / (16p(X)²)

    Raises:
        PoleError: p(X) = 0 (2-torsion 점)
    """
    b = _b(b)
    p = p_of_x(b, X)
    if not p:
        raise PoleError("p(X) = 0 인 점(2-torsion)은 E′ 두 배 공식의 극점입니다.")
    X2 = X * X
    numerator = X2 * X2 - (b * b + b) * X2 - 2 * b * b * X - b * b * b
    return numerator / (4 * p), n_of_x(b, X) * Yp / (16 * p * p)
