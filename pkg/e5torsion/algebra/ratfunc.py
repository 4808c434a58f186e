"""
기약 유리함수 모듈입니다.

## 주요 기능
- RatFunc: gcd(num, den) = 1, 분모 모닉인 표준형을 항상 유지하는 num/den
- 대입: u ↦ ζⁱu (scale_root), u ↦ 1/u (invert), 일차분수변환 (moebius), 유리함수 합성 (compose)
- 계수별 갈루아 작용 (coeff_galois), 정확/복소 평가 (rf_eval)

표준형이 유일하므로 두 유리함수가 같은지는 분자/분모 계수 비교로 판정합니다.
"""

from __future__ import annotations

from fractions import Fraction
import logging

from ..errors import DegenerateSubstitutionError, PoleError, VariableMismatchError
from .field import ZERO, CycloElement, zeta_pow
from .poly import UniPoly


logger = logging.getLogger(__name__)

_SCALARS = (CycloElement, Fraction, int)


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var=None):
        if not isinstance(num, UniPoly):
            num = UniPoly((num,), var or "u")
        if den is None:
            den = UniPoly((1,), num.var, num.zero)
        elif not isinstance(den, UniPoly):
            den = UniPoly((den,), num.var, num.zero)
        if num.var != den.var:
            raise VariableMismatchError(f"분자와 분모의 변수가 다릅니다: {num.var} vs {den.var}")
        if den.is_zero():
            raise PoleError("분모가 0 인 유리함수는 만들 수 없습니다.")
        if num.is_zero():
            self.num = num
            self.den = UniPoly((1,), num.var, num.zero)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        self.num, self.den = RatFunc._monicize(num, den)

    @staticmethod
    def _monicize(num, den):
        lc = den.lc
        if lc == 1:
            return num, den
        inv = 1 / lc
        return num.scale(inv), den.scale(inv)

    @classmethod
    def _from_coprime(cls, num, den):
        """이미 서로소임이 알려진 num/den 을 모닉화만 해서 만듭니다."""
        if den.is_zero():
            raise PoleError("분모가 0 인 유리함수는 만들 수 없습니다.")
        obj = object.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = num, UniPoly((1,), num.var, num.zero)
        else:
            obj.num, obj.den = cls._monicize(num, den)
        return obj

    @classmethod
    def gen(cls, var="u"):
        return cls._from_coprime(UniPoly.gen(var), UniPoly((1,), var))

    @classmethod
    def const(cls, c, var="u"):
        return cls._from_coprime(UniPoly((c,), var), UniPoly((1,), var))

    @property
    def var(self):
        return self.num.var

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("상수가 아닌 유리함수입니다.")
        return self.num.coeff(0)

    def __bool__(self):
        return not self.num.is_zero()

    # ---- 피연산자 변환 ----
    def _operand(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise VariableMismatchError(f"변수가 다른 유리함수는 섞을 수 없습니다: {self.var} vs {other.var}")
            return other
        if isinstance(other, UniPoly):
            if other.var != self.var:
                return None
            return RatFunc._from_coprime(other, UniPoly((1,), self.var, other.zero))
        if isinstance(other, _SCALARS):
            return RatFunc._from_coprime(UniPoly((other,), self.var), UniPoly((1,), self.var))
        return None

    # ---- 산술 (Henrici) ----
    def __add__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc._from_coprime(self.num + o.num, self.den)
        d = self.den.gcd(o.den)
        if d.degree == 0:
            return RatFunc._from_coprime(self.num * o.den + o.num * self.den, self.den * o.den)
        b1, b2 = self.den.exact_div(d), o.den.exact_div(d)
        t = self.num * b2 + o.num * b1
        if t.is_zero():
            return RatFunc._from_coprime(t, UniPoly((1,), self.var))
        e = t.gcd(d)
        if e.degree > 0:
            t, d = t.exact_div(e), d.exact_div(e)
        return RatFunc._from_coprime(t, b1 * b2 * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._from_coprime(-self.num, self.den)

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
        if not self or not o:
            return RatFunc._from_coprime(UniPoly((), self.var), UniPoly((1,), self.var))
        if o.is_constant():
            return RatFunc._from_coprime(self.num.scale(o.num.coeffs[0]), self.den)
        if self.is_constant():
            return RatFunc._from_coprime(o.num.scale(self.num.coeffs[0]), o.den)
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc._from_coprime(self.num * o.num, self.den)
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        g1 = n1.gcd(d2)
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        g2 = n2.gcd(d1)
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RatFunc._from_coprime(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise PoleError("0 유리함수의 역수는 없습니다.")
        return RatFunc._from_coprime(self.den, self.num)

    def __truediv__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        # 서로소인 분자/분모의 거듭제곱도 서로소
        return RatFunc._from_coprime(self.num**n, self.den**n)

    # ---- 대입 ----
    def scale_root(self, c):
        """var ↦ c·var (c 는 보통 ζⁱ)"""
        return RatFunc._from_coprime(self.num.scale_var(c), self.den.scale_var(c))

    def twist(self, i):
        """var ↦ ζⁱ·var"""
        return self.scale_root(zeta_pow(i))

    def invert(self):
        """var ↦ 1/var"""
        dn, dd = self.num.degree, self.den.degree
        n = max(dn, dd, 0)
        num = self.num.reverse(n) if self.num else self.num
        den = self.den.reverse(n)
        return RatFunc._from_coprime(num, den) if num else RatFunc._from_coprime(num, self.den)

    def moebius(self, a, b, c, d):
        """var ↦ (a·var + b)/(c·var + d)"""
        if a * d - b * c == 0:
            raise DegenerateSubstitutionError("ad - bc = 0 인 일차분수변환은 대입할 수 없습니다.")
        p = UniPoly((b, a), self.var)
        q = UniPoly((d, c), self.var)
        return self._compose_pq(p, q)

    def compose(self, g):
        """self(g). 결과의 변수는 g 의 변수입니다."""
        if isinstance(g, UniPoly):
            g = RatFunc._from_coprime(g, UniPoly((1,), g.var, g.zero))
        if not isinstance(g, RatFunc):
            return self.evaluate(g)
        return self._compose_pq(g.num, g.den)

    def _compose_pq(self, p, q):
        # N(p/q)/D(p/q) = Σ nᵢ pⁱ q^(n-i) / Σ dᵢ pⁱ q^(n-i)
        n = max(self.num.degree, self.den.degree, 0)
        p_pows = [UniPoly((1,), p.var, p.zero)]
        q_pows = [UniPoly((1,), p.var, p.zero)]
        for _ in range(n):
            p_pows.append(p_pows[-1] * p)
            q_pows.append(q_pows[-1] * q)

        def homog(poly):
            acc = UniPoly((), p.var, p.zero)
            for i, c in enumerate(poly.coeffs):
                if c:
                    acc = acc + (p_pows[i] * q_pows[n - i]).scale(c)
            return acc

        num, den = homog(self.num), homog(self.den)
        if den.is_zero():
            if num.is_zero():
                raise DegenerateSubstitutionError("합성 결과가 0/0 입니다.")
            raise PoleError("합성 결과의 분모가 항등적으로 0 입니다.")
        return RatFunc(num, den)

    def conjugate(self, k):
        """계수별 갈루아 작용 ζ ↦ ζᵏ"""
        if k == 1:
            return self
        return RatFunc._from_coprime(self.num.conjugate(k), self.den.conjugate(k))

    def rename(self, var):
        return RatFunc._from_coprime(self.num.rename(var), self.den.rename(var))

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    # ---- 평가 ----
    def evaluate(self, x, k=1):
        """x 에서의 값. 분모가 0 이면 PoleError"""
        if isinstance(x, (RatFunc, UniPoly)):
            return self.compose(x)
        den = self.den.evaluate(x, k)
        if isinstance(den, (float, complex)):
            if den == 0:
                raise PoleError(f"{x} 는 극점입니다.")
            return self.num.evaluate(x, k) / den
        if not den:
            raise PoleError(f"{x} 는 극점입니다.")
        return self.num.evaluate(x, k) / den

    __call__ = evaluate

    # ---- 비교/출력 ----
    def __eq__(self, other):
        try:
            o = self._operand(other)
        except VariableMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r} / {self.den!r})"

    def __str__(self):
        from .serialize import ratfunc_to_str

        return ratfunc_to_str(self)


def rf_arith(f, g, op):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"지원하지 않는 연산입니다: {op}")


def substitute(f, kind, *args):
    """
    대입 진입점.

    Args:
        kind: "scale-root" (인자 i 또는 상수 c), "invert", "moebius" (a, b, c, d), "compose" (g)
    """
    if kind == "scale-root":
        (c,) = args
        return f.twist(c) if isinstance(c, int) else f.scale_root(c)
    if kind == "invert":
        return f.invert()
    if kind == "moebius":
        return f.moebius(*args)
    if kind == "compose":
        (g,) = args
        return f.compose(g)
    raise ValueError(f"지원하지 않는 대입입니다: {kind}")


def coeff_galois(k, f):
    return f.conjugate(k)


def rf_eval(f, x, k=1):
    return f.evaluate(x, k)


def gen(var="u"):
    return RatFunc.gen(var)


def const(c, var="u"):
    return RatFunc.const(c, var)


def rf_zero(var="b"):
    """중첩 다항식의 계수체 0 (Q(ζ₅)(var))"""
    return RatFunc._from_coprime(UniPoly((), var), UniPoly((ZERO + 1,), var))
