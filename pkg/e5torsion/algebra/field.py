"""
Q(ζ₅) 위의 정확한 스칼라 연산 모듈입니다.

## 주요 기능
- ExactRational: 기약분수 (fractions.Fraction 을 그대로 사용)
- CycloElement: 기저 {1, ζ, ζ², ζ³} 위의 원소. 네 좌표를 공통 분모 하나와 정수 분자로 저장합니다.
- galois / norm / embed: 갈루아 작용 ζ ↦ ζᵏ, 노름, 복소 매장 ζ ↦ exp(2πik/5)

Examples:
>>> ALPHA * ALPHA == 5
True
>>> galois(2, EPS) == EPS_BAR
True
"""

from __future__ import annotations

import cmath
from fractions import Fraction
import math

from ..errors import PoleError


ExactRational = Fraction

# ζ^j 의 복소수 값 (주 매장 k=1 기준)
_ROOTS = tuple(cmath.exp(2j * math.pi * j / 5) for j in range(5))
_SUPERSCRIPT = {2: "²", 3: "³"}


def _normalize(nums, den):
    g = math.gcd(*nums, den)
    if g > 1:
        return tuple(n // g for n in nums), den // g
    return tuple(nums), den


class CycloElement:
    """
    Q(ζ₅) 의 원소 c0 + c1·ζ + c2·ζ² + c3·ζ³.

    ζ⁴ = -1-ζ-ζ²-ζ³ 로 항상 축약하므로 표현이 유일하고, 동치 판정은 좌표 비교와 같습니다.
    내부적으로는 (정수 분자 4개, 양의 정수 분모) 형태이며 gcd 로 항상 기약 상태를 유지합니다.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fracs = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = math.lcm(*(f.denominator for f in fracs))
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        self._num, self._den = _normalize(nums, den)

    @classmethod
    def _make(cls, nums, den):
        obj = object.__new__(cls)
        obj._num, obj._den = _normalize(nums, den)
        return obj

    @classmethod
    def from_rational(cls, value):
        value = Fraction(value)
        return cls._make((value.numerator, 0, 0, 0), value.denominator)

    @classmethod
    def random(cls, rng, height=6):
        """속성 테스트용 임의 원소"""
        return cls(*(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(4)))

    # ---- 좌표 ----
    @property
    def coeffs(self):
        return tuple(Fraction(n, self._den) for n in self._num)

    @property
    def c0(self):
        return Fraction(self._num[0], self._den)

    @property
    def c1(self):
        return Fraction(self._num[1], self._den)

    @property
    def c2(self):
        return Fraction(self._num[2], self._den)

    @property
    def c3(self):
        return Fraction(self._num[3], self._den)

    def is_rational(self):
        return not any(self._num[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} 는 유리수가 아닙니다.")
        return Fraction(self._num[0], self._den)

    # ---- 산술 ----
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return CycloElement._make([a + b for a, b in zip(self._num, o._num)], self._den)
        return CycloElement._make(
            [a * o._den + b * self._den for a, b in zip(self._num, o._num)], self._den * o._den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._make([-a for a in self._num], self._den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloElement._make([a * other.numerator for a in self._num], self._den * other.denominator)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        p = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai:
                for j in range(4):
                    p[i + j] += ai * b[j]
        # ζ⁴ = -1-ζ-ζ²-ζ³, ζ⁵ = 1, ζ⁶ = ζ
        nums = (p[0] - p[4] + p[5], p[1] - p[4] + p[6], p[2] - p[4], p[3] - p[4])
        return CycloElement._make(nums, self._den * o._den)

    __rmul__ = __mul__

    def conjugate(self, k):
        """갈루아 자기동형 ζ ↦ ζᵏ"""
        if k not in (1, 2, 3, 4):
            raise ValueError(f"갈루아 작용의 지수는 1..4 중 하나여야 합니다: {k}")
        if k == 1:
            return self
        v = [0] * 5
        for j, c in enumerate(self._num):
            v[(k * j) % 5] += c
        return CycloElement._make((v[0] - v[4], v[1] - v[4], v[2] - v[4], v[3] - v[4]), self._den)

    def norm(self):
        """네 켤레의 곱 (유리수)"""
        prod = self * self.conjugate(2) * self.conjugate(3) * self.conjugate(4)
        return prod.to_rational()

    def inverse(self):
        if not self:
            raise PoleError("Q(ζ₅) 에서 0 의 역원은 존재하지 않습니다.")
        conj = self.conjugate(2) * self.conjugate(3) * self.conjugate(4)
        n = (self * conj).to_rational()
        return conj * (1 / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            q = o.to_rational()
            if q == 0:
                raise PoleError("Q(ζ₅) 에서 0 으로 나눌 수 없습니다.")
            return self * (1 / q)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- 비교 ----
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __bool__(self):
        return any(self._num)

    # ---- 매장 ----
    def embed(self, k=1):
        """ζ ↦ exp(2πik/5) 로의 복소 매장"""
        if k not in (1, 2, 3, 4):
            raise ValueError(f"매장 지수는 1..4 중 하나여야 합니다: {k}")
        return sum((n / self._den) * _ROOTS[(k * j) % 5] for j, n in enumerate(self._num) if n)

    def __complex__(self):
        return complex(self.embed(1))

    # ---- 출력 ----
    def __repr__(self):
        return "CycloElement({})".format(", ".join(str(c) for c in self.coeffs))

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            basis = "" if j == 0 else "ζ" + _SUPERSCRIPT.get(j, "")
            if basis and abs(c) == 1:
                mag = ""
            elif basis and c.denominator != 1:
                mag = f"({abs(c)})"
            else:
                mag = str(abs(c))
            terms.append(("-" if c < 0 else "+", mag + basis))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x):
    if isinstance(x, CycloElement):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloElement.from_rational(x)
    return None


def qa(rational, alpha_part=0):
    """rational + alpha_part·α (α = √5 ∈ Q(ζ₅)) 를 만듭니다."""
    return ALPHA * Fraction(alpha_part) + Fraction(rational)


def zeta_pow(i):
    return ZETA ** (i % 5)


# ---- 명세의 연산 이름 ----
def cyclo_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"지원하지 않는 연산입니다: {op}")


def cyclo_inv(a):
    return _coerce(a).inverse()


def galois(k, a):
    return _coerce(a).conjugate(k)


def norm(a):
    return _coerce(a).norm()


def embed(a, k=1):
    return complex(_coerce(a).embed(k))


ZERO = CycloElement(0)
ONE = CycloElement(1)
ZETA = CycloElement(0, 1)
# α = ζ - ζ² - ζ³ + ζ⁴, 주 매장에서 +√5
ALPHA = ZETA - ZETA**2 - ZETA**3 + ZETA**4
EPS = ZETA + ZETA**4
EPS_BAR = ZETA**2 + ZETA**3
ETA = (ZETA - 1) / ALPHA
