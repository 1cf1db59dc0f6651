"""Alternating templates: words whose slots are skew-symmetrized in sets.

Text form, one token per block, separated by spaces::

    ~x1 ~x2 ~x3 -St3^2 ^St2 X1^3

* ``x1`` is a plain generator; consecutive decorated generators with the
  same decoration (``~x1 ~x2``) form one alternating set.
* ``<d>StK^P`` is ``P`` copies of the standard polynomial over ``x1..xK``.
  Every copy is skew-symmetrized on its own, like the columns of a Young
  diagram; the decoration only distinguishes blocks in print.
* ``XI^P`` is right multiplication by ``xI``, ``P`` times.

Decorations are ``-`` (bar), ``~`` (tilde), ``^`` (hat), ``=`` (double tilde).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Mapping, Optional, Sequence, Union

from ..algebra import ZERO, LeibnizElement, multiply
from .expressions import Expression, Gen, MultiElement, Prod, SymbolicError, word

DECORATIONS = "-~^="


def parity(perm: Sequence[int]) -> int:
    """+1 for even permutations of range(len(perm)), -1 for odd."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_permutations(k: int) -> list[tuple[int, tuple[int, ...]]]:
    return [(parity(p), p) for p in permutations(range(k))]


# --- blocks ----------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Run:
    decoration: str
    names: tuple[str, ...]

    def __str__(self):
        return " ".join(self.decoration + n for n in self.names)


@dataclass(frozen=True)
class St:
    decoration: str
    size: int
    power: int = 1

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(1, self.size + 1))

    def __str__(self):
        return f"{self.decoration}St{self.size}" + ("" if self.power == 1 else f"^{self.power}")


@dataclass(frozen=True)
class Pow:
    name: str
    power: int

    def __str__(self):
        return "X" + self.name[1:] + ("" if self.power == 1 else f"^{self.power}")


Block = Union[Var, Run, St, Pow]


@dataclass(frozen=True)
class Slot:
    """Template leaf: position ``index`` of alternating set ``set_id``."""

    set_id: str
    index: int

    def __str__(self):
        return f"<{self.set_id}:{self.index}>"


@dataclass(frozen=True)
class AlternatingTemplate:
    skeleton: object
    sets: Mapping[str, tuple[str, ...]]
    blocks: Optional[tuple[Block, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sets", {k: tuple(v) for k, v in self.sets.items()})
        for sid, names in self.sets.items():
            if len(set(names)) != len(names):
                raise SymbolicError(f"alternating set {sid!r} repeats a name: {names}")
        for leaf in _template_leaves(self.skeleton):
            if isinstance(leaf, Slot):
                if leaf.set_id not in self.sets:
                    raise SymbolicError(f"slot refers to unknown set {leaf.set_id!r}")
                if not 0 <= leaf.index < len(self.sets[leaf.set_id]):
                    raise SymbolicError(f"slot index {leaf.index} out of range for {leaf.set_id!r}")

    @property
    def degree(self) -> int:
        return sum(1 for _ in _template_leaves(self.skeleton))

    def content(self) -> dict[str, int]:
        """Degree in each generator (identical for every expanded term)."""
        out: dict[str, int] = {}
        for leaf in _template_leaves(self.skeleton):
            name = leaf.name if isinstance(leaf, Gen) else self.sets[leaf.set_id][leaf.index]
            out[name] = out.get(name, 0) + 1
        return out

    def term_count(self) -> int:
        return prod(factorial(len(v)) for v in self.sets.values())

    def __str__(self):
        if self.blocks is None:
            return repr(self)
        return " ".join(str(b) for b in self.blocks)


def _template_leaves(e):
    if isinstance(e, Prod):
        yield from _template_leaves(e.left)
        yield from _template_leaves(e.right)
    else:
        yield e


def _fill(e, assignment: Mapping[str, tuple[str, ...]]):
    if isinstance(e, Slot):
        return Gen(assignment[e.set_id][e.index])
    if isinstance(e, Gen):
        return e
    return Prod(_fill(e.left, assignment), _fill(e.right, assignment))


def expand_alternations(t: AlternatingTemplate) -> MultiElement:
    """Sum over independent permutations of every set, signed by parity."""
    ids = sorted(t.sets)
    per_set = [signed_permutations(len(t.sets[s])) for s in ids]
    out: dict[Expression, Fraction] = {}
    for choice in product(*per_set):
        sign = 1
        assignment = {}
        for sid, (sg, perm) in zip(ids, choice):
            sign *= sg
            names = t.sets[sid]
            assignment[sid] = tuple(names[i] for i in perm)
        e = _fill(t.skeleton, assignment)
        out[e] = out.get(e, 0) + sign
    return MultiElement(out)


def standard_polynomial(n: int, names: Optional[Sequence[str]] = None) -> MultiElement:
    if n < 1:
        raise SymbolicError("standard polynomial needs n >= 1")
    names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(1, n + 1))
    if len(names) != n:
        raise SymbolicError(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        raise SymbolicError(f"duplicate names in {names}")
    return MultiElement({word(*(names[i] for i in p)): sg for sg, p in signed_permutations(n)})


def standard_template(n: int, names: Optional[Sequence[str]] = None) -> AlternatingTemplate:
    names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(1, n + 1))
    return compile_blocks((Run("-", names),))


# --- blocks -> template ------------------------------------------------------

def _alternating_groups(blocks: Sequence[Block]):
    """Flatten blocks into a list of ("gen", name) / ("set", names) steps."""
    steps = []
    for b in blocks:
        if isinstance(b, Var):
            steps.append(("gen", b.name))
        elif isinstance(b, Pow):
            steps.extend(("gen", b.name) for _ in range(b.power))
        elif isinstance(b, Run):
            steps.append(("set", b.names))
        elif isinstance(b, St):
            steps.extend(("set", b.names) for _ in range(b.power))
        else:
            raise SymbolicError(f"unknown block {b!r}")
    return steps


def compile_blocks(blocks: Sequence[Block]) -> AlternatingTemplate:
    blocks = tuple(blocks)
    leaves_: list = []
    sets: dict[str, tuple[str, ...]] = {}
    for kind, payload in _alternating_groups(blocks):
        if kind == "gen":
            leaves_.append(Gen(payload))
        else:
            sid = f"s{len(sets)}"
            sets[sid] = payload
            leaves_.extend(Slot(sid, i) for i in range(len(payload)))
    if not leaves_:
        raise SymbolicError("template has no slots")
    skeleton = leaves_[0]
    for leaf in leaves_[1:]:
        skeleton = Prod(skeleton, leaf)
    return AlternatingTemplate(skeleton, sets, blocks)


_GEN_TOKEN = re.compile(r"([-~^=]?)x(\d+)$")
_ST_TOKEN = re.compile(r"([-~^=]?)St(\d+)(?:\^(\d+))?$")
_POW_TOKEN = re.compile(r"X(\d+)(?:\^(\d+))?$")


def parse_blocks(text: str) -> tuple[Block, ...]:
    blocks: list[Block] = []
    for token in text.split():
        m = _GEN_TOKEN.match(token)
        if m:
            dec, idx = m.group(1), f"x{m.group(2)}"
            if not dec:
                blocks.append(Var(idx))
            elif blocks and isinstance(blocks[-1], Run) and blocks[-1].decoration == dec:
                prev = blocks.pop()
                if idx in prev.names:
                    raise SymbolicError(f"{token!r} repeats a name in its alternating set")
                blocks.append(Run(dec, prev.names + (idx,)))
            else:
                blocks.append(Run(dec, (idx,)))
            continue
        m = _ST_TOKEN.match(token)
        if m:
            blocks.append(St(m.group(1), int(m.group(2)), int(m.group(3) or 1)))
            continue
        m = _POW_TOKEN.match(token)
        if m:
            blocks.append(Pow(f"x{m.group(1)}", int(m.group(2) or 1)))
            continue
        raise SymbolicError(f"bad template token {token!r}")
    return tuple(blocks)


def parse_template(text: str) -> AlternatingTemplate:
    return compile_blocks(parse_blocks(text))


def format_template(t: AlternatingTemplate) -> str:
    return str(t)


# --- direct evaluation -----------------------------------------------------

def _alternate_from(value: Optional[LeibnizElement], names, subst) -> LeibnizElement:
    """Signed sum over all orderings of ``names`` applied after ``value``.

    Dynamic programming over subsets: appending slot i after the set S
    contributes (-1)^{#{j in S : j > i}} to the permutation sign.
    """
    vals = [subst[n] for n in names]
    k = len(vals)
    layer: dict[int, LeibnizElement] = {0: value}
    for _ in range(k):
        nxt: dict[int, LeibnizElement] = {}
        for mask, v in layer.items():
            for i in range(k):
                bit = 1 << i
                if mask & bit:
                    continue
                w = vals[i] if v is None else multiply(v, vals[i])
                if bin(mask >> (i + 1)).count("1") % 2:
                    w = -w
                prev = nxt.get(mask | bit)
                nxt[mask | bit] = w if prev is None else prev + w
        layer = nxt
    return layer[(1 << k) - 1]


def evaluate_template(t: AlternatingTemplate, subst: Mapping[str, LeibnizElement]) -> LeibnizElement:
    """Evaluate without expanding.

    Right multiplication by a fixed element is linear, so the alternating sum
    over one contiguous block can be applied to the running value block by
    block. Templates without block structure fall back to full expansion.
    """
    from .expressions import evaluate

    if t.blocks is None:
        return evaluate(expand_alternations(t), subst)
    missing = set(t.content()) - set(subst)
    if missing:
        raise SymbolicError(f"generators without values: {sorted(missing)}")
    value: Optional[LeibnizElement] = None
    for kind, payload in _alternating_groups(t.blocks):
        if kind == "gen":
            x = subst[payload]
            value = x if value is None else multiply(value, x)
        else:
            value = _alternate_from(value, payload, subst)
    return value
