"""Generator elements attached to the admissible Young diagrams.

Each family maps shape parameters to a partition and to one or more
alternating templates. Generator ``x_i`` carries the degree of row ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from ..algebra import A, B, C, LeibnizElement, Poly
from ..partitions import Partition
from .templates import AlternatingTemplate, parse_template


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    minimum: tuple[int, ...]
    shape: Callable[..., tuple[int, ...]]
    templates: tuple[str, ...]
    # generator -> "a"/"b"/"c" plus the generator that also receives f
    witness: tuple[tuple[str, str], ...]
    witness_poly: str


_H1_7_WITNESS = (("x1", "a"), ("x2", "b"), ("x3", "c"), ("x4", ""))
_ONE_CORNER_WITNESS = (("x1", "a"), ("x2", "b"), ("x3", "c"))

FAMILIES: dict[str, Family] = {f.name: f for f in [
    Family("f1", ("m", "k", "l"), (1, 1, 1), lambda m, k, l: (m + k + l, m + k, m),
           ("-x1 -x2 -x3 ~St3^{m-1} ^St2^{k} X1^{l}",), _ONE_CORNER_WITNESS, "x3"),
    Family("f2", ("m", "k", "l"), (1, 1, 1), lambda m, k, l: (m + k + l, m + k, m),
           ("-x1 -x2 ~St3^{m} ^St2^{k-1} X1^{l}",), _ONE_CORNER_WITNESS, "x2"),
    Family("f3", ("m", "k", "l"), (1, 1, 1), lambda m, k, l: (m + k + l, m + k, m),
           ("x1 -St3^{m} ~St2^{k} X1^{l-1}",), _ONE_CORNER_WITNESS, "x1"),
    Family("h1", ("m",), (0,), lambda m: (m + 1, 1, 1, 1),
           ("~x1 ~x2 ~x3 ~x4 X1^{m}",
            "x1 ~St4 X1^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h2", ("m",), (1,), lambda m: (m + 1, m + 1, 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St2^{m}",
            "~x1 ~x2 -St4 ^St2^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h3", ("m",), (1,), lambda m: (m + 1, m + 1, m + 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St3^{m}",
            "~x1 ~x2 ~x3 -St4 ^St3^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h4", ("m", "k"), (1, 1), lambda m, k: (m + k + 1, k + 1, 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St2^{k} X1^{m}",
            "~x1 ~x2 -St4 ^St2^{k-1} X1^{m}",
            "x1 ~St4 -St2^{k} X1^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h5", ("m", "k"), (1, 1), lambda m, k: (m + k + 1, k + 1, k + 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St3^{k} X1^{m}",
            "~x1 ~x2 ~x3 -St4 ^St3^{k-1} X1^{m}",
            "x1 ~St4 -St3^{k} X1^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h6", ("m", "k"), (1, 1), lambda m, k: (m + k + 1, m + k + 1, k + 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St3^{k} ^St2^{m}",
            "~x1 ~x2 ~x3 -St4 ^St3^{k-1} =St2^{m}",
            "~x1 ~x2 -St4 ^St3^{k} =St2^{m-1}"), _H1_7_WITNESS, "x4"),
    # The fourth element ends in X1^{m-1}; X1^{m} would overshoot the degree by one.
    Family("h7", ("m", "k", "p"), (1, 1, 1), lambda m, k, p: (m + k + p + 1, k + p + 1, p + 1, 1),
           ("~x1 ~x2 ~x3 ~x4 -St3^{p} ^St2^{k} X1^{m}",
            "~x1 ~x2 ~x3 -St4 ^St3^{p-1} =St2^{k} X1^{m}",
            "~x1 ~x2 -St4 ^St3^{p} =St2^{k-1} X1^{m}",
            "x1 ~St4 -St3^{p} ^St2^{k} X1^{m-1}"), _H1_7_WITNESS, "x4"),
    Family("h8", ("n",), (1,), lambda n: (n,),
           ("x1 X1^{n-1}",), _ONE_CORNER_WITNESS, "x1"),
    Family("h9", ("m",), (1,), lambda m: (m, m),
           ("~x1 ~x2 -St2^{m-1}",), _ONE_CORNER_WITNESS, "x1"),
    Family("h10", ("m",), (1,), lambda m: (m, m, m),
           ("~x1 ~x2 ~x3 -St3^{m-1}",), _ONE_CORNER_WITNESS, "x3"),
    Family("h11", ("m", "k"), (1, 1), lambda m, k: (m + k, k),
           ("~x1 ~x2 -St2^{k-1} X1^{m}",
            "x1 ~St2^{k} X1^{m-1}"), _ONE_CORNER_WITNESS, "x2"),
    Family("h12", ("m", "k"), (1, 1), lambda m, k: (m + k, k, k),
           ("~x1 ~x2 ~x3 -St3^{k-1} X1^{m}",
            "x1 ~St3^{k} X1^{m-1}"), _ONE_CORNER_WITNESS, "x3"),
    Family("h13", ("m", "k"), (1, 1), lambda m, k: (m + k, m + k, k),
           ("~x1 ~x2 ~x3 -St3^{k-1} ^St2^{m}",
            "~x1 ~x2 ~St3^{k} -St2^{m-1}"), _ONE_CORNER_WITNESS, "x3"),
    Family("h14", ("m", "k", "p"), (1, 1, 1), lambda m, k, p: (m + k + p, k + p, p),
           ("~x1 ~x2 ~x3 -St3^{p-1} ^St2^{k} X1^{m}",
            "~x1 ~x2 -St3^{p} ^St2^{k-1} X1^{m}",
            "x1 ~St3^{p} -St2^{k} X1^{m-1}"), _ONE_CORNER_WITNESS, "x3"),
]}


class CatalogError(ValueError):
    pass


_ID = re.compile(r"^([fh]\d+)(?:\((\d+)\)|[:.](\d+))?$")


def parse_id(element_id: str) -> tuple[str, int]:
    """``"h11(2)"`` -> ("h11", 2); a bare family name means superscript 1."""
    m = _ID.match(element_id.strip())
    if not m or m.group(1) not in FAMILIES:
        raise CatalogError(f"unknown catalog element {element_id!r}")
    index = int(m.group(2) or m.group(3) or 1)
    fam = FAMILIES[m.group(1)]
    if not 1 <= index <= len(fam.templates):
        raise CatalogError(f"{fam.name} has superscripts 1..{len(fam.templates)}, got {index}")
    return fam.name, index


def element_ids(family: str | None = None) -> list[str]:
    fams = [FAMILIES[family]] if family else FAMILIES.values()
    out = []
    for fam in fams:
        if len(fam.templates) == 1:
            out.append(fam.name)
        else:
            out.extend(f"{fam.name}({i})" for i in range(1, len(fam.templates) + 1))
    return out


def _check_params(fam: Family, params: dict[str, int]) -> tuple[int, ...]:
    if set(params) != set(fam.params):
        raise CatalogError(f"{fam.name} takes parameters {fam.params}, got {sorted(params)}")
    values = tuple(int(params[p]) for p in fam.params)
    for name, v, lo in zip(fam.params, values, fam.minimum):
        if v < lo:
            raise CatalogError(f"{fam.name}: {name}={v} is below {lo}")
    return values


def _render(text: str, params: dict[str, int]) -> str:
    def sub(m):
        var, _, offset = m.group(1).partition("-")
        value = params[var] - int(offset or 0)
        if value < 0:
            raise CatalogError(f"negative power {m.group(1)}={value} for {params}")
        return str(value)

    return re.sub(r"\{([^}]*)\}", sub, text)


def generator_element(element_id: str, **params: int) -> AlternatingTemplate:
    """Alternating template of a catalog element, e.g. ``generator_element("h11(2)", m=1, k=1)``."""
    name, index = parse_id(element_id)
    fam = FAMILIES[name]
    _check_params(fam, params)
    return parse_template(_render(fam.templates[index - 1], params))


def element_shape(element_id: str, **params: int) -> Partition:
    name, _ = parse_id(element_id)
    fam = FAMILIES[name]
    return Partition(fam.shape(*_check_params(fam, params)))


def default_poly(degree: int) -> Poly:
    """t^degree: enough derivatives survive any X1 power in an element of that degree."""
    return Poly.monomial(degree)


def witness_substitution(element_id: str, f: Poly) -> dict[str, LeibnizElement]:
    """Substitution used to show a superscript-(1) element is nonzero.

    Four-row families: x1=a, x2=b, x3=c, x4=f. Other families put f on one
    generator next to its basis element: x1=a+f for h8 and h9, x2=b+f for
    h11, x3=c+f for h10 and h12-h14. For h10, x1=a+f vanishes whatever f is:
    the leading alternation reduces to f(R_b R_c - R_c R_b) and R_c is the
    identity on polynomials.
    """
    name, _ = parse_id(element_id)
    fam = FAMILIES[name]
    basis = {"a": A, "b": B, "c": C, "": LeibnizElement()}
    out = {g: basis[v] for g, v in fam.witness}
    out[fam.witness_poly] = out.get(fam.witness_poly, LeibnizElement()) + LeibnizElement.from_poly(f)
    return out
