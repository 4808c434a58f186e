"""
곱 형태로 표시되는 유리함수입니다.

상수 × ∏(분자 인수)^e / ∏(분모 인수)^e 를 그대로 들고 있다가 expand() 로 RatFunc 를 만듭니다.
보고서에서 점의 좌표를 인수분해된 모양으로 보여줄 때 사용합니다.
"""

from dataclasses import dataclass, field

from .field import galois
from .poly import UniPoly
from .ratfunc import RatFunc


@dataclass(frozen=True)
class Factored:
    const: object
    num: tuple = field(default_factory=tuple)  # ((UniPoly, 지수), ...)
    den: tuple = field(default_factory=tuple)
    var: str = "u"

    def expand(self):
        n = UniPoly((self.const,), self.var)
        for poly, e in self.num:
            n = n * poly**e
        d = UniPoly((1,), self.var)
        for poly, e in self.den:
            d = d * poly**e
        return RatFunc(n, d)

    def _map(self, const_fn, poly_fn):
        return Factored(
            const_fn(self.const),
            tuple((poly_fn(p), e) for p, e in self.num),
            tuple((poly_fn(p), e) for p, e in self.den),
            self.var,
        )

    def conjugate(self, k):
        return self._map(lambda c: galois(k, c), lambda p: p.conjugate(k))

    def scale_root(self, c):
        return self._map(lambda x: x, lambda p: p.scale_var(c))

    def __str__(self):
        def part(factors):
            out = []
            for p, e in factors:
                body = f"({p})"
                out.append(body if e == 1 else f"{body}^{e}")
            return "·".join(out) or "1"

        return f"({self.const})·{part(self.num)} / {part(self.den)}"
