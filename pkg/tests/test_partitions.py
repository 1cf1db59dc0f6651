from math import factorial

import pytest
from hypothesis import given, strategies as st

from leibniz_v3.partitions import (
    NULL,
    Partition,
    PartitionError,
    classify,
    column_height,
    corner_cells,
    enumerate_partitions,
    hook_dimension,
    iter_partition_tuples,
    remove_first_column,
    shape_tag,
)


def euler_partition_counts(limit: int) -> list[int]:
    """p(0..limit) from the pentagonal number recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def grid_corners(parts) -> int:
    """Corner cells found by scanning the diagram as a set of cells."""
    cells = {(i, j) for i, r in enumerate(parts) for j in range(r)}
    return sum(1 for (i, j) in cells if (i, j + 1) not in cells and (i + 1, j) not in cells)


@st.composite
def partitions(draw, max_n=25):
    n = draw(st.integers(1, max_n))
    parts, left = [], n
    while left:
        top = min(left, parts[-1]) if parts else left
        x = draw(st.integers(1, top))
        parts.append(x)
        left -= x
    return Partition(tuple(sorted(parts, reverse=True)))


def test_counts_match_pentagonal_recurrence():
    p = euler_partition_counts(50)
    for n in range(1, 51):
        assert sum(1 for _ in iter_partition_tuples(n)) == p[n]


def test_enumeration_order_and_uniqueness():
    parts = [p.parts for p in enumerate_partitions(7)]
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts) == 15
    assert all(sum(p) == 7 for p in parts)


def test_row_bound_prunes_exactly():
    for n in range(1, 30):
        full = [t for t in iter_partition_tuples(n) if len(t) <= 4]
        assert list(iter_partition_tuples(n, max_rows=4)) == full


def test_parse_and_print():
    lam = Partition.parse(" 3, 2 ,1 ")
    assert lam.parts == (3, 2, 1) and lam.n == 6
    assert str(lam) == "3,2,1"
    for bad in ("3,x,1", "1,2", "0", "3,-1"):
        with pytest.raises(PartitionError):
            Partition.parse(bad)


def test_bad_token_is_named():
    with pytest.raises(PartitionError, match="'x'"):
        Partition.parse("3,x")


@given(partitions())
def test_corner_count_matches_cell_scan(lam):
    assert corner_cells(lam) == grid_corners(lam.parts)


@given(partitions())
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().n == lam.n
    assert column_height(lam, 1) == lam.rows


@given(partitions())
def test_remove_first_column_drops_one_from_each_row(lam):
    rest = remove_first_column(lam)
    assert rest.n == lam.n - lam.rows
    assert rest.parts == tuple(r - 1 for r in lam.parts if r > 1)


def test_hook_dimensions_square_sum_to_factorial():
    for n in range(1, 11):
        assert sum(hook_dimension(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_hook_dimension_known_values():
    assert hook_dimension((3, 2)) == 5
    assert hook_dimension((2, 2, 1)) == 5
    assert hook_dimension((4, 2, 1)) == 35


@pytest.mark.parametrize("parts, tag, params", [
    ((5,), "Row", {"n": 5}),
    ((3, 3), "TwoEqual", {"p": 3}),
    ((2, 2, 2), "ThreeEqual", {"p": 2}),
    ((4, 2, 2, 1), "FourRowTailOne", None),
    ((5, 2), "TwoRowsDistinct", {"p": 2, "q": 3}),
    ((4, 2, 2), "Hook3Bottom", None),
    ((3, 3, 1), "Hook3Top", None),
    ((6, 3, 1), "ThreeDistinct", {"p": 1, "q": 2, "r": 3}),
    ((3, 2, 2, 2), "Null", None),
    ((1, 1, 1, 1, 1), "Null", None),
])
def test_classify(parts, tag, params):
    cls = classify(parts)
    assert cls.tag == tag
    assert shape_tag(parts) == tag
    if params:
        for k, v in params.items():
            assert cls.param(k) == v


@given(partitions())
def test_classification_rebuilds_partition(lam):
    cls = classify(lam)
    assert cls.rebuild() == (None if cls.tag == NULL else lam)


@given(partitions(max_n=30))
def test_tags_agree(lam):
    assert shape_tag(lam.parts) == classify(lam).tag
