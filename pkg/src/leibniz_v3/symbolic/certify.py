"""Linear-independence certificates from evaluations in the algebra.

If the matrix of evaluations (one column per element, one row per coordinate
of each substituted value) has full column rank, no nontrivial combination of
the elements can vanish identically, so the elements are independent modulo
the identities of the algebra. A rank deficit proves nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence, Union

from ..algebra import A, B, C, LeibnizElement, Poly, format_element
from .expressions import MultiElement, evaluate
from .linalg import bareiss_rank, null_vector
from .templates import AlternatingTemplate, evaluate_template

Element = Union[MultiElement, AlternatingTemplate]
Substitution = Mapping[str, LeibnizElement]


def _value(e: Element, s: Substitution) -> LeibnizElement:
    if isinstance(e, AlternatingTemplate):
        return evaluate_template(e, s)
    return evaluate(e, s)


def evaluation_matrix(elements: Sequence[Element], substitutions: Sequence[Substitution]) -> list[list[Fraction]]:
    """Rows: substitution-major coordinates (alpha, beta, gamma, f_0..f_D)."""
    values = [[_value(e, s) for e in elements] for s in substitutions]
    degrees = [v.f.degree for row in values for v in row if v.f]
    top = max(degrees, default=0)
    rows = []
    for i in range(len(substitutions)):
        coords = [v.coordinates(top) for v in values[i]]
        for j in range(top + 4):
            rows.append([c[j] for c in coords])
    return rows


def independence_certificate(elements: Sequence[Element], substitutions: Sequence[Substitution]) -> bool:
    """True proves linear independence; False is inconclusive."""
    if not elements:
        return True
    return bareiss_rank(evaluation_matrix(elements, substitutions)) == len(elements)


def substitution_pool(generators: Sequence[str], f: Poly) -> list[dict[str, LeibnizElement]]:
    """Every assignment of a, b, c, a+f, b+f, c+f to the generators, in a fixed order."""
    fe = LeibnizElement.from_poly(f)
    choices = [("a", A), ("b", B), ("c", C), ("a+f", A + fe), ("b+f", B + fe), ("c+f", C + fe)]
    gens = sorted(generators)
    return [dict(zip(gens, (v for _, v in combo))) for combo in product(choices, repeat=len(gens))]


@dataclass
class Certificate:
    labels: list[str]
    substitutions: list[dict[str, LeibnizElement]]
    matrix: list[list[Fraction]]
    rank: int
    null_vector: Optional[list[Fraction]] = None
    poly: Optional[Poly] = None
    params: dict = field(default_factory=dict)

    @property
    def independent(self) -> bool:
        return self.rank == len(self.labels)

    def __bool__(self):
        return self.independent

    def as_dict(self) -> dict:
        from ..algebra import format_poly

        return {
            "elements": self.labels,
            "params": self.params,
            "f": format_poly(self.poly) if self.poly is not None else None,
            "substitutions": [{g: format_element(v) for g, v in sorted(s.items())} for s in self.substitutions],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "rank": self.rank,
            "independent": self.independent,
            "null_vector": None if self.null_vector is None else [str(x) for x in self.null_vector],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def build_certificate(elements: Sequence[Element], substitutions: Sequence[Substitution],
                      labels: Optional[Sequence[str]] = None) -> Certificate:
    labels = list(labels) if labels is not None else [f"e{i}" for i in range(len(elements))]
    matrix = evaluation_matrix(elements, substitutions)
    rank = bareiss_rank(matrix)
    nv = None if rank == len(elements) else null_vector(matrix, len(elements))
    return Certificate(labels, [dict(s) for s in substitutions], matrix, rank, nv)


def search_certificate(elements: Sequence[Element], pool: Sequence[Substitution],
                       labels: Optional[Sequence[str]] = None) -> Certificate:
    """Greedy scan of ``pool``: keep a substitution only when it raises the rank."""
    chosen: list[Substitution] = []
    rank = 0
    for s in pool:
        if rank == len(elements):
            break
        trial = bareiss_rank(evaluation_matrix(elements, chosen + [s]))
        if trial > rank:
            chosen.append(s)
            rank = trial
    return build_certificate(elements, chosen, labels)
