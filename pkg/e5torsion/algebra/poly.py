"""
일변수 다항식 모듈입니다.

## 주요 기능
- UniPoly: 계수 튜플(낮은 차수부터)과 변수 이름으로 이루어진 불변 다항식
- 계수는 Q(ζ₅) 원소가 기본이며, RatFunc 를 계수로 두면 Q(ζ₅)(b)[X] 같은 중첩 다항식도 표현됩니다.
- divmod / gcd / resultant / discriminant / compose / 계수별 갈루아 작용
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ExactDivisionError, PoleError, VariableMismatchError
from .field import ONE, ZERO, CycloElement


_GROUND = (CycloElement, Fraction, int)


def _is_ground(value):
    return isinstance(value, _GROUND)


def _to_complex(c, k):
    if isinstance(c, CycloElement):
        return complex(c.embed(k))
    if isinstance(c, (int, Fraction, float, complex)):
        return complex(c)
    # 중첩 계수는 수치 평가 대상이 아님
    raise TypeError(f"복소수로 바꿀 수 없는 계수입니다: {type(c).__name__}")


class UniPoly:
    """
    계수가 체 원소인 일변수 다항식.

    Args:
        coeffs: 낮은 차수부터의 계수 나열. 정수/분수는 zero 의 타입으로 변환됩니다.
        var: 변수 이름 (u, b, X, x, r ...)
        zero: 계수체의 0. 계수 변환(zero + c)에 쓰입니다.
    """

    __slots__ = ("coeffs", "var", "zero")

    def __init__(self, coeffs=(), var="u", zero=ZERO):
        kind = type(zero)
        cs = [c if type(c) is kind else zero + c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.zero = zero

    @classmethod
    def _raw(cls, coeffs, var, zero):
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj.coeffs = tuple(cs)
        obj.var = var
        obj.zero = zero
        return obj

    # ---- 생성 도우미 ----
    @classmethod
    def gen(cls, var="u", zero=ZERO):
        return cls((0, 1), var, zero)

    @classmethod
    def constant(cls, c, var="u", zero=ZERO):
        return cls((c,), var, zero)

    # ---- 기본 속성 ----
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def _one(self):
        return self.zero + 1

    # ---- 피연산자 변환 ----
    def _operand(self, other):
        if isinstance(other, UniPoly):
            if other.var == self.var:
                return other
            if _is_ground(self.zero):
                raise VariableMismatchError(f"변수가 다른 다항식은 섞을 수 없습니다: {self.var} vs {other.var}")
            return UniPoly._raw((self.zero + other,), self.var, self.zero)
        if hasattr(other, "den") and getattr(other, "var", None) == self.var:
            # 같은 변수의 유리함수는 RatFunc 쪽 연산에 맡김
            return None
        if _is_ground(other):
            return UniPoly._raw((self.zero + other,), self.var, self.zero)
        if _is_ground(self.zero):
            if hasattr(other, "var"):
                raise VariableMismatchError(f"변수가 다른 값은 섞을 수 없습니다: {self.var} vs {other.var}")
            return None
        return UniPoly._raw((self.zero + other,), self.var, self.zero)

    # ---- 산술 ----
    def __add__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return UniPoly._raw(cs, self.var, self.zero)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.var, self.zero)

    def __sub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly._raw((), self.var, self.zero)
        if len(b) == 1:
            c = b[0]
            return UniPoly._raw([x * c for x in a], self.var, self.zero)
        if len(a) == 1:
            c = a[0]
            return UniPoly._raw([c * x for x in b], self.var, self.zero)
        out = [self.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly._raw(out, self.var, self.zero)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = UniPoly._raw((self._one(),), self.var, self.zero)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """모든 계수에 스칼라 c 를 곱합니다."""
        return UniPoly._raw([x * c for x in self.coeffs], self.var, self.zero)

    def __divmod__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise PoleError("0 다항식으로 나눌 수 없습니다.")
        rem = list(self.coeffs)
        dq = o.degree
        lc = o.lc
        inv_lc = None if lc == 1 else self._one() / lc
        quot = [self.zero] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq]
            if not c:
                continue
            if inv_lc is not None:
                c = c * inv_lc
            quot[i] = c
            for j, y in enumerate(o.coeffs):
                if y:
                    rem[i + j] = rem[i + j] - c * y
        return UniPoly._raw(quot, self.var, self.zero), UniPoly._raw(rem[:dq], self.var, self.zero)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ExactDivisionError(f"{self.var} 다항식 나눗셈에서 나머지가 남았습니다 (나머지 차수 {r.degree}).")
        return q

    def divides(self, other):
        return not (other % self)

    def monic(self):
        if not self.coeffs or self.lc == 1:
            return self
        inv = self._one() / self.lc
        return UniPoly._raw([c * inv for c in self.coeffs], self.var, self.zero)

    def gcd(self, other):
        """모닉 최대공약수. gcd(0, 0) = 0"""
        a, b = self, self._operand(other)
        while b:
            a, b = b, (a % b).monic()
        return a.monic()

    def resultant(self, other):
        """유클리드 호제법으로 계산한 Res(self, other)"""
        p, q = self, self._operand(other)
        if p.is_zero() or q.is_zero():
            return self.zero
        result = self._one()
        while True:
            dp, dq = p.degree, q.degree
            if dq == 0:
                return result * q.lc**dp
            r = p % q
            if r.is_zero():
                return self.zero
            factor = q.lc ** (dp - r.degree)
            if (dp * dq) % 2:
                factor = -factor
            result = result * factor
            p, q = q, r

    def sylvester_resultant(self, other):
        """
        실베스터 행렬식을 Bareiss 소거로 계산한 Res(self, other).

        나눗셈 없는 소거라서 계수가 다항식환(예: Q(ζ₅)[b])이어도 분수체로 올리지 않고 계산됩니다.
        """
        o = self._operand(other)
        m, n = self.degree, o.degree
        if m < 0 or n < 0:
            return self.zero
        size = m + n
        if size == 0:
            return self._one()
        rows = []
        for i in range(n):
            row = [self.zero] * size
            for j, c in enumerate(reversed(self.coeffs)):
                row[i + j] = c
            rows.append(row)
        for i in range(m):
            row = [self.zero] * size
            for j, c in enumerate(reversed(o.coeffs)):
                row[i + j] = c
            rows.append(row)
        return bareiss_determinant(rows, self._one())

    def discriminant(self, method="euclid"):
        n = self.degree
        if method == "bareiss":
            res = self.sylvester_resultant(self.derivative())
        else:
            res = self.resultant(self.derivative())
        disc = _exact_quotient(res, self.lc)
        return -disc if (n * (n - 1) // 2) % 2 else disc

    # ---- 변환 ----
    def derivative(self):
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.var, self.zero)

    def compose(self, other):
        """self(other). other 가 다항식이면 결과 변수는 other 의 변수입니다."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * other + c
        if acc is None:
            return other * 0
        if not isinstance(acc, UniPoly) and isinstance(other, UniPoly):
            return UniPoly((acc,), other.var, other.zero)
        return acc

    def scale_var(self, c):
        """var ↦ c·var"""
        out, power = [], self._one()
        for x in self.coeffs:
            out.append(x * power)
            power = power * c
        return UniPoly._raw(out, self.var, self.zero)

    def reverse(self, n=None):
        """varⁿ·p(1/var). n 의 기본값은 차수"""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError(f"뒤집기 차수 {n} 가 다항식 차수 {self.degree} 보다 작습니다.")
        cs = list(self.coeffs) + [self.zero] * (n + 1 - len(self.coeffs))
        return UniPoly._raw(cs[::-1], self.var, self.zero)

    def conjugate(self, k):
        """계수별 갈루아 작용 ζ ↦ ζᵏ"""
        return UniPoly._raw([c.conjugate(k) for c in self.coeffs], self.var, self.zero)

    def map_coeffs(self, fn, zero=None):
        zero = self.zero if zero is None else zero
        return UniPoly([fn(c) for c in self.coeffs], self.var, zero)

    def rename(self, var):
        return UniPoly._raw(self.coeffs, var, self.zero)

    def evaluate(self, x, k=1):
        """
        Horner 평가. x 가 복소수(float/complex)이면 계수를 k 번째 매장으로 보낸 뒤 계산합니다.
        """
        if isinstance(x, (float, complex)):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + _to_complex(c, k)
            return acc
        acc = self.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    # ---- 비교/출력 ----
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if hasattr(other, "den"):
            return NotImplemented
        if _is_ground(other) or not _is_ground(self.zero):
            try:
                return self.degree <= 0 and self.coeff(0) == other
            except TypeError:
                return False
        return NotImplemented

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.coeff(0))
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.var}: {list(self.coeffs)!r})"

    def __str__(self):
        from .serialize import poly_to_str

        return poly_to_str(self)


def _exact_quotient(a, b):
    if b == 1:
        return a
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    return a / b


def bareiss_determinant(rows, one):
    """분수 없는 가우스 소거. 중간 나눗셈은 모두 나누어떨어집니다."""
    m = [list(r) for r in rows]
    size = len(m)
    sign = 1
    prev = one
    for k in range(size - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, size) if m[i][k]), None)
            if swap is None:
                return one * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = _exact_quotient(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            m[i][k] = one * 0
        prev = pivot
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def poly_arith(p, q, op):
    """다항식 사칙연산 진입점. divrem 은 (몫, 나머지) 쌍을 돌려줍니다."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divrem":
        return divmod(p, q)
    if op == "gcd":
        return p.gcd(q)
    raise ValueError(f"지원하지 않는 연산입니다: {op}")


U = UniPoly.gen("u")
ONE_POLY = UniPoly((ONE,), "u")
