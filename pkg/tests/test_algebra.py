import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from leibniz_v3.algebra import (
    A,
    B,
    C,
    ONE,
    T,
    ZERO,
    LeibnizElement,
    Poly,
    basis_sample,
    format_element,
    leibniz_defect,
    left_normed_product,
    multiply,
    parse_element,
    parse_poly,
    random_element,
    right_power,
)

# --- structure-constant oracle ---------------------------------------------
# Basis keys: "a", "b", "c", and ints i for t^i.


def basis_product(u, v) -> dict:
    if isinstance(u, str):
        if (u, v) == ("a", "b"):
            return {"c": -1}
        if (u, v) == ("b", "a"):
            return {"c": 1}
        return {}
    if v == "a":
        return {u - 1: u} if u else {}
    if v == "b":
        return {u + 1: 1}
    if v == "c":
        return {u: 1}
    return {}


def to_dict(x: LeibnizElement) -> dict:
    d = {k: v for k, v in (("a", x.alpha), ("b", x.beta), ("c", x.gamma)) if v}
    d.update(x.f.terms)
    return d


def oracle_multiply(x: LeibnizElement, y: LeibnizElement) -> dict:
    out: dict = {}
    for (u, p), (v, q) in product(to_dict(x).items(), to_dict(y).items()):
        for w, r in basis_product(u, v).items():
            out[w] = out.get(w, 0) + p * q * r
    return {k: v for k, v in out.items() if v}


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@st.composite
def elements(draw, max_degree=5):
    coeffs = draw(st.lists(fractions, min_size=0, max_size=max_degree + 1))
    return LeibnizElement(draw(fractions), draw(fractions), draw(fractions),
                          Poly({i: c for i, c in enumerate(coeffs)}))


def test_basis_products():
    assert A * B == -C
    assert B * A == C
    assert C * A == ZERO and A * C == ZERO
    assert T * A == ONE
    assert T * B == LeibnizElement.from_poly({2: 1})
    assert T * C == T
    assert A * T == ZERO and T * T == ZERO


def test_left_normed_and_right_power():
    assert left_normed_product([T, B, B, A]) == LeibnizElement.from_poly({2: 3})
    assert right_power(T, B, 3) == LeibnizElement.from_poly({4: 1})
    assert right_power(T, A, 0) == T


@given(elements(), elements())
def test_product_matches_structure_constants(x, y):
    assert to_dict(multiply(x, y)) == oracle_multiply(x, y)


@given(elements(), elements(), elements(), fractions)
def test_bilinear(x, y, z, k):
    assert (x + y) * z == x * z + y * z
    assert x * (y + z) == x * y + x * z
    assert x.scale(k) * y == (x * y).scale(k) == x * y.scale(k)


@given(elements(), elements())
def test_polynomial_part_of_right_factor_is_ignored(x, y):
    assert x * y == x * LeibnizElement(y.alpha, y.beta, y.gamma)


@settings(max_examples=200)
@given(elements(), elements(), elements())
def test_leibniz_identity(u, v, w):
    assert leibniz_defect(u, v, w).is_zero()


def test_leibniz_identity_on_basis():
    basis = basis_sample()
    assert len(basis) == 6
    for u, v, w in product(basis, repeat=3):
        assert leibniz_defect(u, v, w).is_zero()


def test_random_element_bounds():
    rng = random.Random(5)
    for _ in range(200):
        x = random_element(rng, max_degree=6, bound=100)
        assert x.f.degree is None or x.f.degree <= 6
        for c in (x.alpha, x.beta, x.gamma, *x.f.terms.values()):
            assert abs(c.numerator) <= 100 and c.denominator <= 100


def test_poly_arithmetic():
    f = parse_poly("1 + 2t^3")
    assert f.derivative() == parse_poly("6t^2")
    assert f.shift() == parse_poly("t + 2t^4")
    assert f(2) == 17
    assert (f - f).degree is None
    assert f * parse_poly("t") == f.shift()


@pytest.mark.parametrize("text", ["0", "a", "-b", "2a - b + (3/2)c + [1 + 2t^3]", "[t]", "c + [(-1/2)t^2]"])
def test_print_parse_fixed(text):
    x = parse_element(text)
    assert parse_element(format_element(x)) == x


def test_parse_variants():
    assert parse_element("a + [t^2]") == A + LeibnizElement.from_poly({2: 1})
    assert parse_element("b+t") == B + T
    assert parse_element("3") == ONE.scale(3)
    with pytest.raises(ValueError):
        parse_element("a + q")


@given(elements())
def test_print_parse_roundtrip(x):
    assert parse_element(format_element(x)) == x
    assert LeibnizElement.parse(str(x)) == x
