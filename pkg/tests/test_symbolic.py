import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from leibniz_v3.algebra import A, B, C, T, LeibnizElement, Poly, random_element
from leibniz_v3.checks import random_substitutions
from leibniz_v3.symbolic import (
    FAMILIES,
    AlternatingTemplate,
    CatalogError,
    MultiElement,
    SymbolicError,
    build_certificate,
    complete_linearization,
    element_ids,
    element_shape,
    evaluate,
    evaluate_template,
    expand_alternations,
    format_expr,
    generator_element,
    independence_certificate,
    is_left_normed,
    linearize,
    parse_expr,
    parse_id,
    parse_template,
    search_certificate,
    standard_polynomial,
    substitution_pool,
    witness_substitution,
    word,
)
from leibniz_v3.symbolic.catalog import default_poly
from leibniz_v3.symbolic.linalg import bareiss_rank, null_vector


def elem(text):
    return MultiElement.of(parse_expr(text))


# --- expressions -------------------------------------------------------------

@pytest.mark.parametrize("text", ["x1", "x1x2x3", "x0(x1y)(x2y)", "x1(x2(x3x4))", "a(bc)d"])
def test_expression_roundtrip(text):
    assert format_expr(parse_expr(text)) == text


def test_left_normed_words():
    assert word("x1", "x2", "x3") == parse_expr("x1x2x3")
    assert is_left_normed(parse_expr("x1x2x3"))
    assert not is_left_normed(parse_expr("x1(x2x3)"))


def test_bad_expression():
    for bad in ("", "x1(", "x1)", "(x1"):
        with pytest.raises(SymbolicError):
            parse_expr(bad)


def test_multielement_printing():
    e = elem("x1x2") + elem("x2x1").scale(2) - elem("x1x2").scale(Fraction(1, 2))
    assert str(e) == "(1/2)x1x2 + 2x2x1"
    assert str(elem("x1") - elem("x1")) == "0"


def test_evaluate_requires_all_generators():
    with pytest.raises(SymbolicError):
        evaluate(elem("x1x2"), {"x1": A})


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_evaluate_is_linear(seed):
    rng = random.Random(seed)
    e1, e2 = elem("x1x2(x3x1)"), elem("x2x1x3")
    s = {g: random_element(rng, max_degree=3, bound=9) for g in ("x1", "x2", "x3")}
    k = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    assert evaluate(e1 + e2.scale(k), s) == evaluate(e1, s) + evaluate(e2, s).scale(k)


# --- linearization -----------------------------------------------------------

def test_linearization_golden():
    e = elem("x0(xy)(xy)")
    partial = linearize(e, "x")
    assert str(partial) == "x0(x1y)(x2y) + x0(x2y)(x1y)"
    full = "x0(x1y1)(x2y2) + x0(x1y2)(x2y1) + x0(x2y1)(x1y2) + x0(x2y2)(x1y1)"
    assert str(linearize(partial, "y")) == full
    assert str(complete_linearization(e)) == full


def test_linearize_degree_one_is_rename():
    assert str(linearize(elem("xy"), "x")) == "x1y"


def test_linearize_rejects_clash_and_inhomogeneous():
    with pytest.raises(SymbolicError):
        linearize(elem("x1(xx)"), "x")
    with pytest.raises(SymbolicError):
        linearize(elem("xx") + elem("xy"), "x")


def test_linearization_evaluates_as_polarization():
    # Setting every fresh copy back to x multiplies by d!.
    e = elem("x0(xy)(xy)")
    lin = linearize(e, "x")
    rng = random.Random(3)
    for _ in range(10):
        x0, x, y = (random_element(rng, max_degree=3, bound=9) for _ in range(3))
        lhs = evaluate(lin, {"x0": x0, "x1": x, "x2": x, "y": y})
        assert lhs == evaluate(e, {"x0": x0, "x": x, "y": y}).scale(2)


# --- templates ---------------------------------------------------------------

def test_standard_polynomial():
    s3 = standard_polynomial(3)
    assert len(s3) == 6
    assert s3.terms[word("x1", "x2", "x3")] == 1
    assert s3.terms[word("x2", "x1", "x3")] == -1
    assert expand_alternations(parse_template("-x1 -x2 -x3")) == s3


@pytest.mark.parametrize("text", [
    "~x1 ~x2 -St3^2 ^St2 X1^3",
    "x1 ~St4 X1",
    "~x1 ~x2 ~x3 ~x4 -St2",
    "-x1 -x2 -x3 ~St3 ^St2 X1",
])
def test_template_text_roundtrip(text):
    assert str(parse_template(text)) == text


def test_template_bad_tokens():
    for bad in ("~x1 ~x1", "St", "y1", "x1 X"):
        with pytest.raises(SymbolicError):
            parse_template(bad)


def test_st_copies_alternate_independently():
    t = parse_template("x1 -St2^2")
    assert len(t.sets) == 2
    assert t.term_count() == 4
    assert t.content() == {"x1": 3, "x2": 2}


SMALL_TEMPLATES = [
    "~x1 ~x2 -St2 X1",
    "x1 ~St3 X1",
    "~x1 ~x2 ~x3 -St3",
    "~x1 ~x2 -St3 ^St2",
    "~x1 ~x2 ~x3 ~x4 X1",
]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SMALL_TEMPLATES), st.integers(0, 10**6))
def test_blockwise_evaluation_matches_expansion(text, seed):
    t = parse_template(text)
    plain = AlternatingTemplate(t.skeleton, t.sets)
    for s in random_substitutions(sorted(t.content()), 3, seed=seed, max_degree=3):
        assert evaluate_template(t, s) == evaluate(expand_alternations(t), s) == evaluate_template(plain, s)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_swapping_alternated_values_negates(seed):
    # Each generator occurs once, inside a single alternating set.
    t = parse_template("~x1 ~x2 ~x3 X4")
    s = next(random_substitutions(["x1", "x2", "x3", "x4"], 1, seed=seed, max_degree=3))
    swapped = dict(s, x1=s["x3"], x3=s["x1"])
    assert evaluate_template(t, swapped) == -evaluate_template(t, s)


# --- catalog -----------------------------------------------------------------

def _grid(fam, values=(1, 2)):
    from itertools import product

    for combo in product(values, repeat=len(fam.params)):
        yield dict(zip(fam.params, combo))


def test_catalog_ids():
    assert parse_id("h11(2)") == ("h11", 2)
    assert parse_id("h11:2") == parse_id("h11.2") == ("h11", 2)
    assert parse_id("h8") == ("h8", 1)
    assert element_ids("h14") == ["h14(1)", "h14(2)", "h14(3)"]
    assert len(element_ids()) == 3 + 1 + 2 * 2 + 3 * 3 + 4 + 4 + 2 * 3 + 3
    for bad in ("h15", "h11(3)", "g1", "h11(0)"):
        with pytest.raises(CatalogError):
            parse_id(bad)


def test_catalog_parameter_errors():
    with pytest.raises(CatalogError):
        generator_element("h11(1)", m=1)
    with pytest.raises(CatalogError):
        generator_element("h11(1)", m=0, k=1)


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_template_content_matches_shape(family):
    fam = FAMILIES[family]
    for eid in element_ids(family):
        for params in _grid(fam):
            t = generator_element(eid, **params)
            shape = element_shape(eid, **params)
            content = t.content()
            assert [content[f"x{i}"] for i in range(1, shape.rows + 1)] == list(shape.parts), (eid, params)
            assert t.degree == shape.n


def test_h11_second_element_alternates_first_two_generators():
    t = generator_element("h11(2)", m=1, k=1)
    assert str(t) == "x1 ~St2 X1^0"
    assert str(expand_alternations(t)) == "x1x1x2 - x1x2x1"


@pytest.mark.parametrize("eid, params", [
    ("h11(1)", {"m": 1, "k": 1}), ("h12(1)", {"m": 2, "k": 1}), ("h10", {"m": 2}), ("h7(1)", {"m": 1, "k": 1, "p": 1}),
])
def test_witness_values_nonzero(eid, params):
    n = element_shape(eid, **params).n
    value = evaluate_template(generator_element(eid, **params), witness_substitution(eid, default_poly(n)))
    assert not value.is_zero()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_h10_vanishes_when_f_sits_on_x1(m):
    t = generator_element("h10", m=m)
    for deg in range(0, 6):
        f = LeibnizElement.from_poly(Poly.monomial(deg))
        assert evaluate_template(t, {"x1": A + f, "x2": B, "x3": C}).is_zero()
    assert not evaluate_template(t, witness_substitution("h10", default_poly(3 * m))).is_zero()


def test_low_degree_f_can_hide_a_witness():
    t = generator_element("h11(1)", m=2, k=1)
    assert evaluate_template(t, witness_substitution("h11(1)", Poly.monomial(1))).is_zero()
    assert not evaluate_template(t, witness_substitution("h11(1)", default_poly(3))).is_zero()


# --- linear algebra and certificates -----------------------------------------

small_ints = st.integers(-6, 6)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_bareiss_matches_sympy(r, c, data):
    rows = [[Fraction(data.draw(small_ints), data.draw(st.integers(1, 4))) for _ in range(c)] for _ in range(r)]
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()
    nv = null_vector(rows, c)
    if bareiss_rank(rows) == c:
        assert nv is None
    else:
        assert any(nv)
        assert all(sum(a * b for a, b in zip(row, nv)) == 0 for row in rows)


def test_explicit_pair_with_linear_f_is_inconclusive():
    els = [generator_element("h11(1)", m=1, k=1), generator_element("h11(2)", m=1, k=1)]
    for deg, expected in ((1, False), (2, True)):
        f = LeibnizElement.from_poly(Poly.monomial(deg))
        subs = [{"x1": A, "x2": B + f}, {"x1": A + f, "x2": B}]
        assert independence_certificate(els, subs) is expected
    cert = build_certificate(els, [{"x1": A, "x2": B + T}, {"x1": A + T, "x2": B}], ["h11(1)", "h11(2)"])
    assert cert.rank == 1 and cert.null_vector is not None


def test_dependent_elements_are_not_certified():
    t = generator_element("h11(1)", m=1, k=1)
    pool = substitution_pool(sorted(t.content()), Poly.monomial(3))
    cert = search_certificate([t, t], pool)
    assert cert.rank == 1 and not cert
    assert cert.null_vector == [Fraction(-1), Fraction(1)] or cert.null_vector == [Fraction(1), Fraction(-1)]


def test_pool_shape():
    pool = substitution_pool(["x2", "x1"], Poly.monomial(2))
    assert len(pool) == 36
    assert pool[0] == {"x1": A, "x2": A}


def test_certificate_json_is_deterministic():
    ids = ["h12(1)", "h12(2)"]
    els = [generator_element(e, m=1, k=2) for e in ids]
    gens = sorted(set().union(*(t.content() for t in els)))
    runs = [search_certificate(els, substitution_pool(gens, default_poly(5)), ids).to_json() for _ in range(2)]
    assert runs[0] == runs[1]
    assert '"independent": true' in runs[0]
