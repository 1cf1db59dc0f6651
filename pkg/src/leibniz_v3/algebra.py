"""The Leibniz algebra H + Q[t] built from the Heisenberg algebra.

The Heisenberg part has basis a, b, c with ``ba = -ab = c`` and all other
basis products zero. Polynomials form a right module: ``f.a = f'``,
``f.b = t f``, ``f.c = f``. The product on the direct sum is

    (x + f)(y + g) = xy + f.y

so the polynomial part of the right factor never contributes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]


class Poly:
    """Sparse univariate polynomial in t with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        for deg, coef in (terms or {}).items():
            if deg < 0:
                raise ValueError("negative degree")
            coef = Fraction(coef)
            if coef:
                clean[int(deg)] = coef
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "Poly":
        # trusted: nonzero Fraction values only
        self = object.__new__(cls)
        self._terms = terms
        self._hash = None
        return self

    @classmethod
    def monomial(cls, deg: int, coef: Rational = 1) -> "Poly":
        return cls({deg: coef})

    @classmethod
    def constant(cls, c: Rational) -> "Poly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def degree(self):
        """Highest degree, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def coeff(self, deg: int) -> Fraction:
        return self._terms.get(deg, Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "Poly") -> "Poly":
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for d, c in other._terms.items():
            v = out.get(d)
            if v is None:
                out[d] = c
            else:
                v = v + c
                if v:
                    out[d] = v
                else:
                    del out[d]
        return Poly._raw(dict(sorted(out.items())))

    def __neg__(self):
        return Poly._raw({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, k: Rational) -> "Poly":
        if not k:
            return ZERO_POLY
        if k == 1:
            return self
        k = Fraction(k)
        return Poly._raw({d: k * c for d, c in self._terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return Poly(out)

    def derivative(self) -> "Poly":
        return Poly._raw({d - 1: d * c for d, c in self._terms.items() if d})

    def shift(self) -> "Poly":
        """Multiply by t."""
        return Poly._raw({d + 1: c for d, c in self._terms.items()})

    def __call__(self, x):
        return sum((c * x ** d for d, c in self._terms.items()), Fraction(0))

    def __repr__(self):
        return f"Poly({format_poly(self) or '0'})"


ZERO_POLY = Poly()


@dataclass(frozen=True)
class LeibnizElement:
    """alpha*a + beta*b + gamma*c + f(t)."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    f: Poly = ZERO_POLY

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if type(v) is not Fraction:
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def from_poly(cls, f: Poly | Mapping[int, Rational]) -> "LeibnizElement":
        return cls(f=f if isinstance(f, Poly) else Poly(f))

    @property
    def lie(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    def is_zero(self) -> bool:
        return not (self.alpha or self.beta or self.gamma or self.f)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if not isinstance(other, LeibnizElement):
            return NotImplemented
        return LeibnizElement(self.alpha + other.alpha, self.beta + other.beta,
                              self.gamma + other.gamma, self.f + other.f)

    def __neg__(self):
        return LeibnizElement(-self.alpha, -self.beta, -self.gamma, -self.f)

    def __sub__(self, other):
        if not isinstance(other, LeibnizElement):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Rational) -> "LeibnizElement":
        k = Fraction(k)
        return LeibnizElement(k * self.alpha, k * self.beta, k * self.gamma, self.f.scale(k))

    def __mul__(self, other):
        if isinstance(other, LeibnizElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    def coordinates(self, max_degree: int) -> list[Fraction]:
        """(alpha, beta, gamma, f_0, ..., f_max_degree)."""
        return [self.alpha, self.beta, self.gamma] + [self.f.coeff(d) for d in range(max_degree + 1)]

    def __str__(self):
        return format_element(self)

    @classmethod
    def parse(cls, text: str) -> "LeibnizElement":
        return parse_element(text)


ZERO = LeibnizElement()
A = LeibnizElement(alpha=1)
B = LeibnizElement(beta=1)
C = LeibnizElement(gamma=1)
ONE = LeibnizElement.from_poly({0: 1})
T = LeibnizElement.from_poly({1: 1})


def act(f: Poly, alpha: Fraction, beta: Fraction, gamma: Fraction) -> Poly:
    """Right action of alpha*a + beta*b + gamma*c on f: alpha f' + beta t f + gamma f."""
    terms = f._terms
    if not terms or not (alpha or beta or gamma):
        return ZERO_POLY
    out: dict[int, Fraction] = {}
    for d, c in terms.items():
        if alpha and d:
            v = alpha * d * c
            out[d - 1] = out[d - 1] + v if d - 1 in out else v
        if gamma:
            v = gamma * c
            out[d] = out[d] + v if d in out else v
        if beta:
            out[d + 1] = beta * c
    return Poly._raw({d: c for d, c in sorted(out.items()) if c})


_F0 = Fraction(0)


def multiply(x: LeibnizElement, y: LeibnizElement) -> LeibnizElement:
    # ab = -c, ba = c
    gamma = x.beta * y.alpha - x.alpha * y.beta
    return LeibnizElement(_F0, _F0, gamma, act(x.f, y.alpha, y.beta, y.gamma))


def left_normed_product(xs: Sequence[LeibnizElement]) -> LeibnizElement:
    if not xs:
        raise ValueError("left-normed product of an empty sequence")
    return reduce(multiply, xs)


def right_power(x: LeibnizElement, y: LeibnizElement, m: int) -> LeibnizElement:
    """x Y^m: multiply on the right by y, m times."""
    if m < 0:
        raise ValueError("power must be non-negative")
    for _ in range(m):
        x = multiply(x, y)
    return x


def leibniz_defect(u: LeibnizElement, v: LeibnizElement, w: LeibnizElement) -> LeibnizElement:
    """(uv)w - (uw)v - u(vw); identically zero in this algebra."""
    return (u * v) * w - (u * w) * v - u * (v * w)


def basis_sample() -> list[LeibnizElement]:
    """a, b, c, 1, t, t^2."""
    return [A, B, C, ONE, T, LeibnizElement.from_poly({2: 1})]


def random_element(rng, max_degree: int = 6, bound: int = 100) -> LeibnizElement:
    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    deg = rng.randint(-1, max_degree)
    f = Poly({d: q() for d in range(deg + 1)})
    return LeibnizElement(q(), q(), q(), f)


# --- text format: "2a - b + (3/2)c + [1 + 2t^3]" ---------------------------

def _fmt_coef(c: Fraction, unit: bool) -> str:
    """Magnitude of a coefficient; unit=True drops a bare 1."""
    c = abs(c)
    if c == 1 and unit:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _join(terms: Iterable[tuple[Fraction, str]]) -> str:
    out = ""
    for coef, body in terms:
        mag = _fmt_coef(coef, unit=bool(body))
        if not out:
            out = ("-" if coef < 0 else "") + mag + body
        else:
            out += (" - " if coef < 0 else " + ") + mag + body
    return out


def format_poly(f: Poly) -> str:
    def mono(d):
        return "" if d == 0 else "t" if d == 1 else f"t^{d}"

    return _join((c, mono(d)) for d, c in f.terms.items())


def format_element(x: LeibnizElement) -> str:
    terms = [(k, name) for k, name in zip(x.lie, "abc") if k]
    s = _join(terms)
    if x.f:
        bracket = f"[{format_poly(x.f)}]"
        s = f"{s} + {bracket}" if s else bracket
    return s or "0"


_TOKEN = re.compile(r"\s*(?:(\[[^\]]*\])|([+-])|(\(\s*-?\d+\s*/\s*\d+\s*\)|\d+(?:/\d+)?)|([abct])(?:\^(\d+))?)")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r} in {text!r}")
        pos = m.end()
        yield m


def _parse_terms(text: str, allowed: str, allow_bracket: bool):
    """Yield (coef, symbol, exponent, bracket_text) per signed term."""
    sign, coef, pending = 1, None, False
    for m in _tokens(text):
        bracket, op, num, sym, exp = m.groups()
        if op:
            if pending:
                yield sign * coef, "1", 0, None
                sign, coef, pending = 1, None, False
            sign = sign * (-1 if op == "-" else 1)
            continue
        if num:
            if pending:
                raise ValueError(f"two numbers in a row in {text!r}")
            coef = Fraction(num.strip("() ").replace(" ", ""))
            pending = True
            continue
        k = sign * (coef if coef is not None else 1)
        if bracket:
            if not allow_bracket:
                raise ValueError(f"nested bracket in {text!r}")
            yield k, None, None, bracket[1:-1]
        else:
            if sym not in allowed:
                raise ValueError(f"unexpected symbol {sym!r} in {text!r}")
            yield k, sym, int(exp) if exp else 1, None
        sign, coef, pending = 1, None, False
    if pending:
        yield sign * coef, "1", 0, None


def parse_poly(text: str) -> Poly:
    out: dict[int, Fraction] = {}
    for k, sym, exp, _ in _parse_terms(text, "t", allow_bracket=False):
        d = 0 if sym == "1" else exp
        out[d] = out.get(d, 0) + k
    return Poly(out)


def parse_element(text: str) -> LeibnizElement:
    """Inverse of ``format_element``. Bare ``t`` terms and constants are
    accepted outside brackets as polynomial terms."""
    if text.strip() == "0":
        return ZERO
    lie = {"a": Fraction(0), "b": Fraction(0), "c": Fraction(0)}
    f = ZERO_POLY
    for k, sym, exp, bracket in _parse_terms(text, "abct", allow_bracket=True):
        if bracket is not None:
            f = f + parse_poly(bracket).scale(k)
        elif sym in lie:
            if exp != 1:
                raise ValueError(f"powers of {sym} are not elements: {text!r}")
            lie[sym] += k
        else:
            f = f + Poly({0 if sym == "1" else exp: k})
    return LeibnizElement(lie["a"], lie["b"], lie["c"], f)
