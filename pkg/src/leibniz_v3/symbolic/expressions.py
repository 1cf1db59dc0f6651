"""Bracketed words over named generators and their rational combinations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Mapping, Union

from ..algebra import ZERO, LeibnizElement, multiply


class SymbolicError(ValueError):
    pass


@dataclass(frozen=True)
class Gen:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Prod:
    left: "Expression"
    right: "Expression"

    def __str__(self):
        return format_expr(self)


Expression = Union[Gen, Prod]


def word(*names: str) -> Expression:
    """Left-normed word x1 x2 ... xn = (((x1 x2) x3) ... xn)."""
    if not names:
        raise SymbolicError("empty word")
    e: Expression = Gen(names[0])
    for name in names[1:]:
        e = Prod(e, Gen(name))
    return e


def leaves(e: Expression) -> Iterator[str]:
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Prod):
            stack.append(node.right)
            stack.append(node.left)
        else:
            yield node.name


def is_left_normed(e: Expression) -> bool:
    while isinstance(e, Prod):
        if not isinstance(e.right, Gen):
            return False
        e = e.left
    return True


def format_expr(e: Expression) -> str:
    """Left-normed brackets are implicit; a product in right position is
    parenthesised, e.g. ``x0(x1y)(x2y)``."""
    if isinstance(e, Gen):
        return e.name
    right = e.right.name if isinstance(e.right, Gen) else f"({format_expr(e.right)})"
    return format_expr(e.left) + right


_NAME = re.compile(r"[A-Za-z]\d*")


def parse_expr(text: str) -> Expression:
    """Inverse of ``format_expr``; generator names are a letter plus digits."""
    text = text.replace(" ", "")
    pos = 0

    def atom():
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            e = seq()
            if pos >= len(text) or text[pos] != ")":
                raise SymbolicError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            return e
        m = _NAME.match(text, pos)
        if not m:
            raise SymbolicError(f"bad expression at {text[pos:]!r}")
        pos = m.end()
        return Gen(m.group())

    def seq():
        e = atom()
        while pos < len(text) and text[pos] != ")":
            e = Prod(e, atom())
        return e

    e = seq()
    if pos != len(text):
        raise SymbolicError(f"trailing text in {text!r}")
    return e


def rename(e: Expression, mapping: Mapping[str, str]) -> Expression:
    if isinstance(e, Gen):
        return Gen(mapping.get(e.name, e.name))
    return Prod(rename(e.left, mapping), rename(e.right, mapping))


class MultiElement:
    """Finite rational combination of expressions; zero coefficients dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Expression, Fraction | int] | None = None):
        self._terms: dict[Expression, Fraction] = {}
        for e, k in (terms or {}).items():
            k = Fraction(k)
            if k:
                self._terms[e] = k

    @classmethod
    def of(cls, e: Expression, k=1) -> "MultiElement":
        return cls({e: k})

    @property
    def terms(self) -> dict[Expression, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiElement):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "MultiElement") -> "MultiElement":
        out = dict(self._terms)
        for e, k in other._terms.items():
            out[e] = out.get(e, 0) + k
        return MultiElement(out)

    def __neg__(self):
        return MultiElement({e: -k for e, k in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "MultiElement":
        return MultiElement({e: k * v for e, v in self._terms.items()})

    def __rmul__(self, k):
        return self.scale(k)

    def generators(self) -> set[str]:
        return {name for e in self._terms for name in leaves(e)}

    def sorted_terms(self) -> list[tuple[Expression, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: format_expr(kv[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for e, k in self.sorted_terms():
            mag = abs(k)
            coef = "" if mag == 1 else (f"{mag}" if mag.denominator == 1 else f"({mag})")
            body = coef + format_expr(e)
            if not out:
                out = ("-" if k < 0 else "") + body
            else:
                out += (" - " if k < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"MultiElement({self})"


# --- evaluation in the algebra --------------------------------------------

def evaluate_expr(e: Expression, subst: Mapping[str, LeibnizElement], memo: dict | None = None) -> LeibnizElement:
    if memo is None:
        memo = {}
    if e in memo:
        return memo[e]
    if isinstance(e, Gen):
        try:
            value = subst[e.name]
        except KeyError:
            raise SymbolicError(f"generator {e.name!r} has no assigned value") from None
    else:
        value = multiply(evaluate_expr(e.left, subst, memo), evaluate_expr(e.right, subst, memo))
    memo[e] = value
    return value


def evaluate(elem: MultiElement, subst: Mapping[str, LeibnizElement]) -> LeibnizElement:
    """Substitute algebra elements for generators and sum the products."""
    memo: dict = {}
    total = ZERO
    for e, k in elem.items():
        total = total + evaluate_expr(e, subst, memo).scale(k)
    return total


# --- linearization ---------------------------------------------------------

def _substitute_occurrences(e: Expression, var: str, fresh: list[str], counter: list[int]) -> Expression:
    if isinstance(e, Gen):
        if e.name != var:
            return e
        name = fresh[counter[0]]
        counter[0] += 1
        return Gen(name)
    left = _substitute_occurrences(e.left, var, fresh, counter)
    right = _substitute_occurrences(e.right, var, fresh, counter)
    return Prod(left, right)


def linearize(elem: MultiElement, var: str) -> MultiElement:
    """Multilinear component after ``var -> var1 + ... + vard``.

    ``var`` must occur the same number ``d >= 1`` of times in every term.
    """
    degrees = {sum(1 for n in leaves(e) if n == var) for e, _ in elem.items()}
    if not elem or degrees == {0}:
        raise SymbolicError(f"variable {var!r} does not occur")
    if len(degrees) != 1 or 0 in degrees:
        raise SymbolicError(f"{var!r} does not occur homogeneously: degrees {sorted(degrees)}")
    (d,) = degrees
    fresh = [f"{var}{i}" for i in range(1, d + 1)]
    clash = elem.generators() & set(fresh)
    if clash:
        raise SymbolicError(f"fresh names {sorted(clash)} already in use")
    out: dict[Expression, Fraction] = {}
    for e, k in elem.items():
        for perm in permutations(fresh):
            new = _substitute_occurrences(e, var, list(perm), [0])
            out[new] = out.get(new, 0) + k
    return MultiElement(out)


def complete_linearization(elem: MultiElement) -> MultiElement:
    """Linearize every repeated variable, in order of first appearance."""
    order: list[str] = []
    for e, _ in elem.sorted_terms():
        for name in leaves(e):
            if name not in order:
                order.append(name)
    for var in order:
        counts = {sum(1 for n in leaves(e) if n == var) for e, _ in elem.items()}
        if max(counts) >= 2:
            elem = linearize(elem, var)
    return elem


def rename_all(elem: MultiElement, mapping: Mapping[str, str]) -> MultiElement:
    out: dict[Expression, Fraction] = {}
    for e, k in elem.items():
        new = rename(e, mapping)
        out[new] = out.get(new, 0) + k
    return MultiElement(out)
