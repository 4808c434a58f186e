"""
t = q^(1/5) 에 대한 절단 급수 모듈입니다.

## 주요 기능
- PuiseuxSeries: 정수 지수 t 급수 (q 지수는 지수 / 5). 계수는 int, Fraction, CycloElement 모두 가능
- r_series(N): r(τ) = q^(1/5)·∏(1-qⁿ)^(n/5) 의 정확한 전개 (t¹ … t^N, N 개 계수)
- r5_series(N): t ↦ t⁵ 치환으로 만든 r(5τ)
- series_of: Q(ζ₅) 계수 다항식/유리함수에 급수를 대입
- series_identity: 두 급수의 처음 N 개 계수 비교

정밀도는 절대 정밀도(precision)로 관리합니다. t^e 의 계수는 e < precision 일 때만 알려져 있습니다.
"""

from fractions import Fraction

from ..algebra.field import CycloElement
from ..errors import InsufficientPrecisionError, PoleError


def _inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


class PuiseuxSeries:
    """Σ coeffs[k]·t^(valuation + k), t^e 계수는 e < precision 에서만 유효"""

    DENOMINATOR = 5
    __slots__ = ("coeffs", "valuation", "precision")

    def __init__(self, coeffs, valuation=0, precision=None):
        coeffs = list(coeffs)
        if precision is None:
            precision = valuation + len(coeffs)
        coeffs = coeffs[: max(precision - valuation, 0)]
        coeffs += [0] * (precision - valuation - len(coeffs))
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        self.coeffs = coeffs[lead:]
        self.valuation = valuation + lead
        self.precision = precision

    @classmethod
    def gen(cls, precision):
        return cls([1], 1, precision)

    @classmethod
    def constant(cls, c, precision):
        return cls([c], 0, precision)

    @property
    def relative_precision(self):
        return self.precision - self.valuation

    @property
    def leading_exponent(self):
        """q 에 대한 첫 지수"""
        return Fraction(self.valuation, self.DENOMINATOR)

    def coeff(self, e):
        if e >= self.precision:
            raise InsufficientPrecisionError(f"t^{e} 의 계수는 알 수 없습니다 (정밀도 {self.precision}).")
        if e < self.valuation:
            return 0
        return self.coeffs[e - self.valuation]

    def truncate(self, precision):
        return PuiseuxSeries(self.coeffs, self.valuation, min(precision, self.precision))

    # ---- 산술 ----
    def _is_series(self, other):
        return isinstance(other, PuiseuxSeries)

    def __add__(self, other):
        if not self._is_series(other):
            if self.precision <= 0:
                return self
            other = PuiseuxSeries.constant(other, self.precision)
        prec = min(self.precision, other.precision)
        val = min(self.valuation, other.valuation, prec)
        return PuiseuxSeries([self.coeff(e) + other.coeff(e) for e in range(val, prec)], val, prec)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries([-c for c in self.coeffs], self.valuation, self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return PuiseuxSeries([c * a for a in self.coeffs], self.valuation, self.precision)

    def __mul__(self, other):
        if not self._is_series(other):
            return self.scale(other)
        val = self.valuation + other.valuation
        prec = min(self.valuation + other.precision, other.valuation + self.precision)
        n = prec - val
        a, b = self.coeffs[:n], other.coeffs[:n]
        out = [0] * max(n, 0)
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(min(len(b), n - i)):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        return PuiseuxSeries(out, val, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise InsufficientPrecisionError("알려진 0 이 아닌 계수가 없어 역수를 구할 수 없습니다.")
        a = self.coeffs
        n = len(a)
        inv0 = _inv(a[0])
        b = [inv0]
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                if a[i]:
                    acc = acc + a[i] * b[k - i]
            b.append(-acc * inv0)
        return PuiseuxSeries(b, -self.valuation, -self.valuation + n)

    def __truediv__(self, other):
        if self._is_series(other):
            return self * other.inverse()
        if not other:
            raise PoleError("급수를 0 으로 나눌 수 없습니다.")
        return self.scale(_inv(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = PuiseuxSeries.constant(1, self.relative_precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute_power(self, m):
        """t ↦ t^m (τ ↦ mτ)"""
        if m < 1:
            raise ValueError(f"치환 지수는 양의 정수여야 합니다: {m}")
        out = [0] * (len(self.coeffs) * m)
        for k, c in enumerate(self.coeffs):
            out[k * m] = c
        return PuiseuxSeries(out, self.valuation * m, self.precision * m)

    def conjugate(self, k):
        coeffs = [c.conjugate(k) if isinstance(c, CycloElement) else c for c in self.coeffs]
        return PuiseuxSeries(coeffs, self.valuation, self.precision)

    def __repr__(self):
        return f"PuiseuxSeries(valuation={self.valuation}, precision={self.precision}, coeffs={self.coeffs[:5]}...)"

    def __str__(self):
        terms = [f"({c})*t^{self.valuation + k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms[:8] + [f"O(t^{self.precision})"])


def legendre5(n):
    """르장드르 기호 (n/5)"""
    return (0, 1, -1, -1, 1)[n % 5]


def r_series(N):
    """r(τ) 의 t¹ … t^N 계수 (정수)"""
    if N < 1:
        raise ValueError(f"계수 개수는 1 이상이어야 합니다: {N}")
    # p(t) = ∏(1 - t^(5n))^(n/5) 의 t⁰ … t^(N-1)
    p = [0] * N
    p[0] = 1
    n = 1
    while 5 * n < N:
        step = 5 * n
        chi = legendre5(n)
        if chi == 1:
            for e in range(N - 1, step - 1, -1):
                p[e] -= p[e - step]
        elif chi == -1:
            for e in range(step, N):
                p[e] += p[e - step]
        n += 1
    return PuiseuxSeries(p, 1, N + 1)


def r5_series(N):
    """r(5τ) (t ↦ t⁵)"""
    return r_series(N).substitute_power(5)


def series_of(f, s):
    """다항식(UniPoly) 또는 유리함수(RatFunc) f 에 급수 s 를 대입"""
    if hasattr(f, "den"):
        return series_of(f.num, s) / series_of(f.den, s)
    # 상수 계수는 Horner 중간값보다 정밀도가 높아야 결과 정밀도를 깎지 않음
    exact = s.precision + s.relative_precision + max(f.degree, 0) * abs(s.valuation)
    if f.is_zero():
        return PuiseuxSeries([], exact, exact)
    *rest, lead = f.coeffs
    acc = PuiseuxSeries.constant(lead, exact)
    for c in reversed(rest):
        acc = acc * s + c
    return acc


def series_identity(lhs, rhs, N):
    """
    처음 N 개 계수가 같은지 비교합니다.

    Returns:
        (일치 여부, 첫 불일치 설명 또는 None)

    Raises:
        InsufficientPrecisionError: 한쪽이 N 개 계수를 줄 수 없는 경우
    """
    start = min(lhs.valuation, rhs.valuation)
    stop = start + N
    for side, s in (("좌변", lhs), ("우변", rhs)):
        if s.precision < stop:
            raise InsufficientPrecisionError(f"{side} 정밀도 {s.precision} < 필요한 {stop}")
    for e in range(start, stop):
        a, b = lhs.coeff(e), rhs.coeff(e)
        if a != b:
            return False, f"t^{e}: {a} != {b}"
    return True, None
