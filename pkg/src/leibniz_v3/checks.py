"""Verification sweeps shared by the CLI and the acceptance tests.

Each sweep yields ``InvariantReport`` rows in increasing n so callers can
stream them and stop at the first disagreement.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Sequence

from . import invariants as inv
from .algebra import A, B, C, T, basis_sample, leibniz_defect, random_element
from .invariants import InvariantReport
from .partitions import iter_partition_tuples
from .symbolic.catalog import FAMILIES, default_poly, element_ids, element_shape, generator_element, witness_substitution
from .symbolic.certify import search_certificate, substitution_pool
from .symbolic.templates import evaluate_template

ZERO_SIDE_FAMILIES = ("h1", "h2", "h3", "h4", "h5", "h6", "h7")


def multiplicity_sweep(max_n: int) -> Iterator[InvariantReport]:
    """Per n: the piecewise multiplicity against the corner-cell rule on every partition."""
    for n in range(1, max_n + 1):
        formula = brute = 0
        bad = None
        for t in iter_partition_tuples(n):
            m1, m2 = inv.multiplicity(t), inv.multiplicity_via_corners(t)
            formula += m1
            brute += m2
            if m1 != m2 and bad is None:
                bad = t
        label = n if bad is None else f"{n} counterexample={','.join(map(str, bad))}"
        yield InvariantReport("m_lambda_sum", str(label), formula, brute, bad is None)


def deviation_sweep(max_n: int, brute_up_to: int = 0) -> Iterator[InvariantReport]:
    """l_n - n^2/3 against (n + delta)/3, plus the bounds 0 < dev <= (n+1)/3."""
    for n in range(1, max_n + 1):
        dev = inv.asymptotic_deviation(n)
        expected = Fraction(n + inv.delta(n), 3)
        ok = dev == expected and 0 < dev <= Fraction(n + 1, 3)
        if n <= brute_up_to:
            brute_dev = inv.colength_bruteforce(n) - Fraction(n * n, 3)
            ok = ok and brute_dev == dev
        yield InvariantReport("deviation", str(n), dev, expected, ok)


def colength_sweep(max_n: int) -> Iterator[InvariantReport]:
    """One row per n; the row agrees only if every sub-table agrees."""
    for n in range(1, max_n + 1):
        exact = inv.colength_exact(n)
        brute = inv.colength_bruteforce(n)
        rows = [inv.InvariantReport.of("l_n_cases", n, inv.colength_cases(n), brute)]
        rows += inv.counting_reports(n)
        c = inv.c_count_brute(n) if n >= 4 else 0
        rows.append(inv.InvariantReport.of("l2+l3+c", n, inv.l2(n) + inv.l3(n) + c, brute))
        rows.append(inv.InvariantReport.of("3l-n^2-n", n, inv.delta(n), 3 * brute - n * n - n))
        failed = [r.quantity for r in rows if not r.agree]
        label = str(n) if not failed else f"{n} failed={','.join(failed)}"
        yield InvariantReport("l_n", label, exact, brute, exact == brute and not failed)


# --- witness suite ----------------------------------------------------------

def _param_grid(family: str, values: Sequence[int]):
    fam = FAMILIES[family]
    for combo in product(values, repeat=len(fam.params)):
        params = dict(zip(fam.params, combo))
        if all(v >= lo for v, lo in zip(combo, fam.minimum)):
            yield params


def _fmt_params(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def witness_nonzero_checks(values: Sequence[int] = (1, 2)) -> Iterator[InvariantReport]:
    """Every leading (superscript 1 or unsuperscripted) element is nonzero at its witness."""
    for family in FAMILIES:
        eid = element_ids(family)[0]
        for params in _param_grid(family, values):
            n = element_shape(eid, **params).n
            value = evaluate_template(generator_element(eid, **params), witness_substitution(eid, default_poly(n)))
            yield InvariantReport("witness_nonzero", f"{eid} {_fmt_params(params)}", "nonzero",
                                  "zero" if value.is_zero() else "nonzero", not value.is_zero())


def injective_basis_substitutions(generators: Sequence[str]):
    targets = [A, B, C, T]
    for image in permutations(targets, len(generators)):
        yield dict(zip(generators, image))


def random_substitutions(generators: Sequence[str], count: int, seed: int = 0, max_degree: int = 4):
    rng = random.Random(seed)
    for _ in range(count):
        yield {g: random_element(rng, max_degree=max_degree) for g in generators}


def witness_zero_checks(values: Sequence[int] = (1, 2), random_count: int = 200, seed: int = 0) -> Iterator[InvariantReport]:
    """Superscript >= 2 elements of the four-row families vanish under every substitution tried."""
    for family in ZERO_SIDE_FAMILIES:
        for eid in element_ids(family)[1:]:
            for params in _param_grid(family, values):
                try:
                    t = generator_element(eid, **params)
                except ValueError:
                    continue
                gens = sorted(t.content())
                nonzero = 0
                tried = 0
                for s in list(injective_basis_substitutions(gens)) + list(random_substitutions(gens, random_count, seed)):
                    tried += 1
                    if not evaluate_template(t, s).is_zero():
                        nonzero += 1
                yield InvariantReport("witness_zero", f"{eid} {_fmt_params(params)}", 0, nonzero, nonzero == 0)


def leibniz_checks(random_count: int, seed: int = 0, max_degree: int = 6) -> Iterator[InvariantReport]:
    basis = basis_sample()
    bad = sum(1 for u, v, w in product(basis, repeat=3) if not leibniz_defect(u, v, w).is_zero())
    yield InvariantReport("leibniz_basis", f"{len(basis) ** 3} triples", 0, bad, bad == 0)
    rng = random.Random(seed)
    bad = 0
    for _ in range(random_count):
        u, v, w = (random_element(rng, max_degree=max_degree) for _ in range(3))
        if not leibniz_defect(u, v, w).is_zero():
            bad += 1
    yield InvariantReport("leibniz_random", f"{random_count} triples", 0, bad, bad == 0)


# --- independence certificates ------------------------------------------------

CERTIFIED_FAMILIES = ("h11", "h12", "h13", "h14")


def family_certificate(family: str, params: dict):
    ids = element_ids(family)
    elements = [generator_element(e, **params) for e in ids]
    gens = sorted(set().union(*(t.content() for t in elements)))
    f = default_poly(element_shape(ids[0], **params).n)
    cert = search_certificate(elements, substitution_pool(gens, f), ids)
    cert.poly = f
    cert.params = dict(params)
    return cert


def certificate_bundle(values: Sequence[int] = (1, 2)) -> str:
    """JSON list of certificates for every multi-element one-corner family."""
    certs = [family_certificate(fam, params).as_dict()
             for fam in CERTIFIED_FAMILIES for params in _param_grid(fam, values)]
    return json.dumps(certs, indent=2, sort_keys=True) + "\n"
