"""
상반평면 위에서 r(τ) 를 수치 계산하는 모듈입니다.

## 주요 기능
- TauPoint: Im τ > 0 인 점
- r_eval: 곱 표시를 numpy 로 절단해 계산하고, 절단 길이를 두 배로 늘려 안정성 확인
- cf_eval: 연분수를 깊이 depth 에서 뒤에서부터 계산 (곱 표시 교차 검증용)

q^(1/5) 는 항상 주 가지 exp(2πiτ/5) 를 사용합니다.
"""

from dataclasses import dataclass
import logging
import math

import numpy as np

from ..errors import ConvergenceError


logger = logging.getLogger(__name__)

CHI = np.array([0, 1, -1, -1, 1])


@dataclass(frozen=True)
class TauPoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise ValueError(f"τ 는 상반평면에 있어야 합니다 (Im τ = {self.im}).")

    @classmethod
    def from_complex(cls, z):
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def value(self):
        return complex(self.re, self.im)

    @property
    def q(self):
        return np.exp(2j * np.pi * self.value)

    @property
    def q_fifth(self):
        return np.exp(2j * np.pi * self.value / 5)

    def scaled(self, m):
        """mτ"""
        return TauPoint(self.re * m, self.im * m)

    def fricke5(self):
        """-1/(5τ)"""
        return TauPoint.from_complex(-1 / (5 * self.value))

    def __str__(self):
        return f"{self.re:+.6g}{self.im:+.6g}i"


def factor_count(tau, tol):
    """|q|ⁿ < tol·10⁻³ 가 되는 가장 작은 n"""
    log_abs_q = -2 * math.pi * tau.im
    return max(1, math.ceil(math.log(tol * 1e-3) / log_abs_q))


def _product(tau, n):
    ns = np.arange(1, n + 1)
    factors = np.power(1 - tau.q**ns, CHI[ns % 5])
    return complex(tau.q_fifth * np.prod(factors))


def r_eval(tau, tol=1e-12, max_terms=2000):
    """
    r(τ) = q^(1/5)·∏(1-qⁿ)^(n/5)

    Raises:
        ConvergenceError: 필요한 인수 개수가 max_terms 를 넘거나, 두 배 절단과 tol 이상 차이가 나는 경우
    """
    if not isinstance(tau, TauPoint):
        tau = TauPoint.from_complex(tau)
    n = factor_count(tau, tol)
    if 2 * n > max_terms:
        raise ConvergenceError(f"τ = {tau} 에서 tol = {tol:g} 을 맞추려면 인수 {2 * n}개가 필요합니다 (상한 {max_terms}).")
    value = _product(tau, n)
    check = _product(tau, 2 * n)
    if abs(value - check) > tol * max(1.0, abs(check)):
        raise ConvergenceError(f"τ = {tau}: 절단 길이 {n} 과 {2 * n} 의 차이 {abs(value - check):.3e} > {tol:g}")
    logger.debug(f"r({tau}) = {check} ({2 * n} 개 인수)")
    return check


def cf_eval(tau, depth=40):
    """q^(1/5) / (1 + q/(1 + q²/(1 + …))) 를 깊이 depth 에서 계산"""
    if not isinstance(tau, TauPoint):
        tau = TauPoint.from_complex(tau)
    q = complex(tau.q)
    tail = 1 + 0j
    for k in range(depth, 0, -1):
        tail = 1 + q**k / tail
    return complex(tau.q_fifth) / tail
