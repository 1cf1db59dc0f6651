"""Partitions and Young-diagram combinatorics.

Partitions are stored as weakly decreasing tuples of positive integers.
Enumeration order is lexicographically decreasing, so ``(4,)`` comes before
``(3, 1)`` and golden outputs stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Optional, Sequence


class PartitionError(ValueError):
    """Raised for malformed partitions or operations undefined on them."""


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated form, e.g. ``"3,2,1"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for token in text.split(","):
            token = token.strip()
            if not token.isdigit():
                raise PartitionError(f"bad partition token {token!r}")
            parts.append(int(token))
        return cls(tuple(parts))

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def rows(self) -> int:
        return len(self.parts)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j

    def conjugate(self) -> "Partition":
        return Partition(tuple(column_height(self, j) for j in range(1, (self.parts[0] if self.parts else 0) + 1)))


def _as_parts(lam) -> tuple[int, ...]:
    return lam.parts if isinstance(lam, Partition) else tuple(lam)


def _gen(n: int, largest: int, rows: Optional[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if rows == 0:
        return
    rest_rows = None if rows is None else rows - 1
    for first in range(min(n, largest), 0, -1):
        # remaining cells must fit into rest_rows rows of width <= first
        if rest_rows is not None and (n - first) > first * rest_rows:
            break
        for tail in _gen(n - first, first, rest_rows):
            yield (first,) + tail


def iter_partition_tuples(n: int, max_rows: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield partitions of ``n`` as plain tuples (fast path for sweeps)."""
    if n < 0:
        raise PartitionError("n must be non-negative")
    if max_rows is not None and max_rows < 0:
        raise PartitionError("max_rows must be non-negative")
    return _gen(n, n, max_rows)


def enumerate_partitions(n: int, max_rows: Optional[int] = None) -> list[Partition]:
    """All partitions of ``n``, optionally with at most ``max_rows`` parts.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    return [Partition(t) for t in iter_partition_tuples(n, max_rows)]


def corner_cells(lam) -> int:
    """Number of corner cells, i.e. the number of distinct part values."""
    parts = _as_parts(lam)
    if not parts:
        raise PartitionError("empty partition has no corner cells")
    return len(set(parts))


def column_height(lam, j: int) -> int:
    if j < 1:
        raise PartitionError("column index is 1-based")
    return sum(1 for p in _as_parts(lam) if p >= j)


def remove_first_column(lam) -> Partition:
    parts = _as_parts(lam)
    if not parts:
        raise PartitionError("cannot remove a column from the empty partition")
    return Partition(tuple(p - 1 for p in parts if p >= 2))


def hook_dimension(lam) -> int:
    """Dimension of the irreducible S_n-module of shape ``lam`` (hook formula)."""
    parts = _as_parts(lam)
    if not parts:
        raise PartitionError("hook dimension needs a nonempty partition")
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])]
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(sum(parts)) // prod


# --- shape classification ------------------------------------------------

ROW = "Row"
TWO_EQUAL = "TwoEqual"
THREE_EQUAL = "ThreeEqual"
FOUR_ROW_TAIL_ONE = "FourRowTailOne"
TWO_ROWS_DISTINCT = "TwoRowsDistinct"
HOOK3_BOTTOM = "Hook3Bottom"
HOOK3_TOP = "Hook3Top"
THREE_DISTINCT = "ThreeDistinct"
NULL = "Null"

SHAPE_TAGS = (ROW, TWO_EQUAL, THREE_EQUAL, FOUR_ROW_TAIL_ONE,
              TWO_ROWS_DISTINCT, HOOK3_BOTTOM, HOOK3_TOP, THREE_DISTINCT, NULL)


@dataclass(frozen=True)
class ShapeClass:
    tag: str
    params: tuple[tuple[str, int], ...] = ()

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def rebuild(self) -> Optional[Partition]:
        """Reassemble the partition from the witnesses (None for Null)."""
        p = dict(self.params)
        builders = {
            ROW: lambda: (p["n"],),
            TWO_EQUAL: lambda: (p["p"], p["p"]),
            THREE_EQUAL: lambda: (p["p"],) * 3,
            FOUR_ROW_TAIL_ONE: lambda: (p["p"] + p["q"] + p["r"] + 1, p["p"] + p["q"] + 1, p["p"] + 1, 1),
            TWO_ROWS_DISTINCT: lambda: (p["p"] + p["q"], p["p"]),
            HOOK3_BOTTOM: lambda: (p["p"] + p["q"], p["p"], p["p"]),
            HOOK3_TOP: lambda: (p["p"] + p["q"], p["p"] + p["q"], p["p"]),
            THREE_DISTINCT: lambda: (p["p"] + p["q"] + p["r"], p["p"] + p["q"], p["p"]),
        }
        if self.tag == NULL:
            return None
        return Partition(builders[self.tag]())

    def __str__(self):
        if not self.params:
            return self.tag
        return f"{self.tag}({', '.join(f'{k}={v}' for k, v in self.params)})"


# One matcher per admissible shape. Each returns witnesses or None; classify
# relies on exactly one of them firing.
def _match_row(t):
    if len(t) == 1:
        return (("n", t[0]),)


def _match_two_equal(t):
    if len(t) == 2 and t[0] == t[1]:
        return (("p", t[1]),)


def _match_three_equal(t):
    if len(t) == 3 and t[0] == t[1] == t[2]:
        return (("p", t[2]),)


def _match_four_row(t):
    if len(t) == 4 and t[3] == 1:
        return (("p", t[2] - 1), ("q", t[1] - t[2]), ("r", t[0] - t[1]))


def _match_two_rows(t):
    if len(t) == 2 and t[0] > t[1]:
        return (("p", t[1]), ("q", t[0] - t[1]))


def _match_hook3_bottom(t):
    if len(t) == 3 and t[0] > t[1] == t[2]:
        return (("p", t[2]), ("q", t[0] - t[1]))


def _match_hook3_top(t):
    if len(t) == 3 and t[0] == t[1] > t[2]:
        return (("p", t[2]), ("q", t[1] - t[2]))


def _match_three_distinct(t):
    if len(t) == 3 and t[0] > t[1] > t[2]:
        return (("p", t[2]), ("q", t[1] - t[2]), ("r", t[0] - t[1]))


MATCHERS = (
    (ROW, _match_row),
    (TWO_EQUAL, _match_two_equal),
    (THREE_EQUAL, _match_three_equal),
    (FOUR_ROW_TAIL_ONE, _match_four_row),
    (TWO_ROWS_DISTINCT, _match_two_rows),
    (HOOK3_BOTTOM, _match_hook3_bottom),
    (HOOK3_TOP, _match_hook3_top),
    (THREE_DISTINCT, _match_three_distinct),
)


def classify(lam) -> ShapeClass:
    """Shape class of a nonempty partition, with its (p, q, r) witnesses.

    >>> str(classify(Partition((4, 2))))
    'TwoRowsDistinct(p=2, q=2)'
    """
    t = _as_parts(lam)
    if not t:
        raise PartitionError("cannot classify the empty partition")
    for tag, match in MATCHERS:
        params = match(t)
        if params is not None:
            return ShapeClass(tag, params)
    return ShapeClass(NULL)


def shape_tag(parts: Sequence[int]) -> str:
    """Tag only, without building witnesses; used by the large sweeps."""
    k = len(parts)
    if k == 1:
        return ROW
    if k == 2:
        return TWO_EQUAL if parts[0] == parts[1] else TWO_ROWS_DISTINCT
    if k == 3:
        a, b, c = parts
        if a == b == c:
            return THREE_EQUAL
        if a == b:
            return HOOK3_TOP
        if b == c:
            return HOOK3_BOTTOM
        return THREE_DISTINCT
    if k == 4 and parts[3] == 1:
        return FOUR_ROW_TAIL_ONE
    return NULL
