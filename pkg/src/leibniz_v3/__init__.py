"""Invariants of the Leibniz variety generated by the Heisenberg algebra H
acting on Q[t]: cocharacter multiplicities, colength, codimension, and the
generator elements that witness them."""

from .algebra import A, B, C, ONE, T, ZERO, LeibnizElement, Poly, leibniz_defect, multiply, parse_element
from .invariants import (
    InvariantReport,
    codimension,
    colength_bruteforce,
    colength_cases,
    colength_exact,
    multiplicity,
    multiplicity_via_corners,
)
from .partitions import Partition, PartitionError, classify, corner_cells, enumerate_partitions

__all__ = [
    "A", "B", "C", "ONE", "T", "ZERO",
    "LeibnizElement", "Poly", "leibniz_defect", "multiply", "parse_element",
    "InvariantReport", "codimension", "colength_bruteforce", "colength_cases", "colength_exact",
    "multiplicity", "multiplicity_via_corners",
    "Partition", "PartitionError", "classify", "corner_cells", "enumerate_partitions",
]
