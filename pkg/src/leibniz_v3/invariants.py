"""Numerical invariants of the variety: multiplicities, colength, codimension.

Every closed form here has a brute-force twin that enumerates partitions.
The brute-force sides default to partitions with at most four rows: the
multiplicity of any partition with five or more rows is zero, so the sums are
unchanged (``max_rows=None`` forces the full enumeration, feasible for
n up to about 60).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .partitions import (
    FOUR_ROW_TAIL_ONE,
    HOOK3_BOTTOM,
    HOOK3_TOP,
    NULL,
    ROW,
    THREE_DISTINCT,
    THREE_EQUAL,
    TWO_EQUAL,
    TWO_ROWS_DISTINCT,
    PartitionError,
    _as_parts,
    corner_cells,
    hook_dimension,
    iter_partition_tuples,
    shape_tag,
)

MULTIPLICITY_BY_TAG = {
    ROW: 1,
    TWO_EQUAL: 1,
    THREE_EQUAL: 1,
    FOUR_ROW_TAIL_ONE: 1,
    TWO_ROWS_DISTINCT: 2,
    HOOK3_BOTTOM: 2,
    HOOK3_TOP: 2,
    THREE_DISTINCT: 3,
    NULL: 0,
}

# Rows beyond this carry multiplicity zero.
MAX_ADMISSIBLE_ROWS = 4


@dataclass(frozen=True)
class InvariantReport:
    quantity: str
    input: str
    formula: int | Fraction
    brute: int | Fraction
    agree: bool

    @classmethod
    def of(cls, quantity, input, formula, brute):
        return cls(quantity, str(input), formula, brute, formula == brute)

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("formula", "brute"):
            if isinstance(d[key], Fraction):
                d[key] = str(d[key])
        return d


def delta(n: int) -> int:
    return 1 if n % 3 == 1 else 0


def multiplicity(lam) -> int:
    parts = _as_parts(lam)
    if not parts:
        raise PartitionError("multiplicity needs a nonempty partition")
    return MULTIPLICITY_BY_TAG[shape_tag(parts)]


def multiplicity_via_corners(lam) -> int:
    """Corner-cell restatement: corners for height <= 3, 1 for (.., .., .., 1)."""
    parts = _as_parts(lam)
    if len(parts) <= 3:
        return corner_cells(parts)
    if len(parts) == 4 and parts[3] == 1:
        return 1
    return 0


def _check_positive(n):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def colength_exact(n: int) -> int:
    _check_positive(n)
    num = n * n + n + delta(n)
    assert num % 3 == 0
    return num // 3


_COLENGTH_TABLE = ((12, 2, 0), (12, 6, 1), (12, 10, 2), (12, 14, 4), (12, 18, 7), (12, 22, 10))
_B_TABLE = ((3, 0, 0), (3, 1, 0), (3, 2, 0), (3, 3, 1), (3, 4, 1), (3, 5, 2))
_C_TABLE = ((3, -1, 0), (3, 0, 0), (3, 1, 0), (3, 2, 0), (3, 3, 1), (3, 4, 1))
# r = 4 row has constant term 2; the other rows telescope with l_n, l2 and c.
_L3_TABLE = ((9, -3, 0), (9, 0, 0), (9, 3, 0), (9, 6, 1), (9, 9, 2), (9, 12, 4))


def _mod6(table, n):
    m, r = divmod(n, 6)
    a2, a1, a0 = table[r]
    return a2 * m * m + a1 * m + a0


def colength_cases(n: int) -> int:
    _check_positive(n)
    return _mod6(_COLENGTH_TABLE, n)


def colength_bruteforce(n: int, max_rows: Optional[int] = MAX_ADMISSIBLE_ROWS) -> int:
    _check_positive(n)
    return sum(MULTIPLICITY_BY_TAG[shape_tag(t)] for t in iter_partition_tuples(n, max_rows))


def a_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return n // 2 + 1


def a_count_brute(n: int) -> int:
    return sum(1 for _ in iter_partition_tuples(n, 2))


def b_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _mod6(_B_TABLE, n)


def b_count_brute(n: int) -> int:
    return sum(1 for t in iter_partition_tuples(n, 3) if len(t) == 3)


def c_count(n: int) -> int:
    if n < 4:
        raise ValueError(f"c(n) is defined for n >= 4, got {n}")
    return _mod6(_C_TABLE, n)


def c_count_brute(n: int) -> int:
    if n < 4:
        raise ValueError(f"c(n) is defined for n >= 4, got {n}")
    return sum(1 for t in iter_partition_tuples(n, 4) if len(t) == 4 and t[3] == 1)


def c_count_shifted(n: int) -> int:
    """c(n) as a(n-4) + b(n-4)."""
    if n < 4:
        raise ValueError(f"c(n) is defined for n >= 4, got {n}")
    return a_count(n - 4) + b_count(n - 4)


def l2(n: int) -> int:
    _check_positive(n)
    return n


def l2_brute(n: int) -> int:
    return sum(multiplicity(t) for t in iter_partition_tuples(n, 2))


def l3(n: int) -> int:
    _check_positive(n)
    if n < 3:
        return 0
    return _mod6(_L3_TABLE, n)


def l3_brute(n: int) -> int:
    return sum(multiplicity(t) for t in iter_partition_tuples(n, 3) if len(t) == 3)


def asymptotic_deviation(n: int) -> Fraction:
    """l_n - n^2/3, which equals (n + delta)/3."""
    _check_positive(n)
    return colength_exact(n) - Fraction(n * n, 3)


def codimension(n: int, max_rows: Optional[int] = MAX_ADMISSIBLE_ROWS) -> int:
    _check_positive(n)
    total = 0
    for t in iter_partition_tuples(n, max_rows):
        m = MULTIPLICITY_BY_TAG[shape_tag(t)]
        if m:
            total += m * hook_dimension(t)
    return total


def codimension_via_corners(n: int) -> int:
    _check_positive(n)
    return sum(multiplicity_via_corners(t) * hook_dimension(t) for t in iter_partition_tuples(n))


# --- report builders used by the CLI and the acceptance suite -------------

def colength_report(n: int) -> list[InvariantReport]:
    exact = colength_exact(n)
    brute = colength_bruteforce(n)
    return [
        InvariantReport.of("l_n", n, exact, brute),
        InvariantReport.of("l_n_cases", n, colength_cases(n), brute),
    ]


def counting_reports(n: int) -> list[InvariantReport]:
    """a, b, c, l2, l3 formula-vs-enumeration rows for a single n."""
    rows = [
        InvariantReport.of("a", n, a_count(n), a_count_brute(n)),
        InvariantReport.of("b", n, b_count(n), b_count_brute(n)),
        InvariantReport.of("l2", n, l2(n), l2_brute(n)),
        InvariantReport.of("l3", n, l3(n), l3_brute(n)),
    ]
    if n >= 3:
        rows.append(InvariantReport.of("b_recurrence", n, a_count(n - 3) + b_count(n - 3), b_count_brute(n)))
    if n >= 4:
        rows.append(InvariantReport.of("c", n, c_count(n), c_count_brute(n)))
        rows.append(InvariantReport.of("c_shifted", n, c_count_shifted(n), c_count_brute(n)))
    return rows


def quantity_report(quantity: str, n: int) -> InvariantReport:
    """One row of the named quantity; raises ValueError for unknown names."""
    if quantity in ("l_n", "colength"):
        return InvariantReport.of("l_n", n, colength_exact(n), colength_bruteforce(n))
    if quantity == "c_n":
        return InvariantReport.of("c_n", n, codimension(n), codimension_via_corners(n))
    if quantity == "deviation":
        dev = asymptotic_deviation(n)
        return InvariantReport.of("deviation", n, dev, Fraction(n + delta(n), 3))
    for row in counting_reports(n):
        if row.quantity == quantity:
            return row
    raise ValueError(f"unknown quantity {quantity!r} (or undefined at n={n})")


QUANTITIES = ("l_n", "a", "b", "c", "l2", "l3", "c_n", "deviation")
