"""
보고서용 직렬화/역직렬화.

형식:
    Q(ζ₅) 원소   (c0, c1, c2, c3)               각 좌표는 정수 또는 p/q
    다항식       (…)*u^4 + (…)*u + (…)        차수 내림차순, 0 다항식은 "0"
    유리함수     [분자] / [분모]
"""

from fractions import Fraction
import re

from .field import CycloElement
from .poly import UniPoly
from .ratfunc import RatFunc


_RATIONAL = r"-?\d+(?:/\d+)?"
_CYCLO_RE = re.compile(rf"\(\s*({_RATIONAL})\s*,\s*({_RATIONAL})\s*,\s*({_RATIONAL})\s*,\s*({_RATIONAL})\s*\)")
_TERM_RE = re.compile(rf"^(\(.*?\))(?:\*([A-Za-z]\w*)(?:\^(\d+))?)?$")
_RATFUNC_RE = re.compile(r"^\[(.*)\]\s*/\s*\[(.*)\]$")


def cyclo_to_str(c):
    return "({})".format(", ".join(str(x) for x in c.coeffs))


def parse_cyclo(text):
    m = _CYCLO_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"Q(ζ₅) 원소 형식이 아닙니다: {text!r}")
    return CycloElement(*(Fraction(g) for g in m.groups()))


def _coeff_to_str(c):
    if isinstance(c, CycloElement):
        return cyclo_to_str(c)
    return f"{{{c}}}"


def poly_to_str(p):
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        body = _coeff_to_str(c)
        if i == 1:
            body += f"*{p.var}"
        elif i > 1:
            body += f"*{p.var}^{i}"
        terms.append(body)
    return " + ".join(terms)


def parse_poly(text, var="u"):
    text = text.strip()
    if text == "0":
        return UniPoly((), var)
    coeffs = {}
    for term in text.split(" + "):
        m = _TERM_RE.match(term.strip())
        if m is None:
            raise ValueError(f"다항식 항 형식이 아닙니다: {term!r}")
        coef, name, exp = m.groups()
        if name is not None:
            var = name
        power = 0 if name is None else int(exp or 1)
        coeffs[power] = coeffs.get(power, 0) + parse_cyclo(coef)
    degree = max(coeffs)
    return UniPoly([coeffs.get(i, 0) for i in range(degree + 1)], var)


def ratfunc_to_str(f):
    return f"[{poly_to_str(f.num)}] / [{poly_to_str(f.den)}]"


def parse_ratfunc(text, var="u"):
    m = _RATFUNC_RE.match(text.strip())
    if m is None:
        raise ValueError(f"유리함수 형식이 아닙니다: {text!r}")
    num = parse_poly(m.group(1), var)
    den = parse_poly(m.group(2), var)
    # 분자 또는 분모가 상수이면 변수 이름이 남지 않으므로 맞춰줌
    var = num.var if num.degree > 0 else den.var
    return RatFunc(num.rename(var), den.rename(var))


def parse_exact(text):
    """CLI 입력용: "p/q" 는 유리수, "(c0, c1, c2, c3)" 는 Q(ζ₅) 원소"""
    text = text.strip()
    if text.startswith("("):
        return parse_cyclo(text)
    return CycloElement(Fraction(text))
