"""Free expressions, alternating templates, the element catalog and certificates."""

from .catalog import (
    FAMILIES,
    CatalogError,
    default_poly,
    element_ids,
    element_shape,
    generator_element,
    parse_id,
    witness_substitution,
)
from .certify import (
    Certificate,
    build_certificate,
    evaluation_matrix,
    independence_certificate,
    search_certificate,
    substitution_pool,
)
from .expressions import (
    Gen,
    MultiElement,
    Prod,
    SymbolicError,
    complete_linearization,
    evaluate,
    format_expr,
    is_left_normed,
    linearize,
    parse_expr,
    rename_all,
    word,
)
from .templates import (
    AlternatingTemplate,
    Slot,
    compile_blocks,
    evaluate_template,
    expand_alternations,
    parse_template,
    standard_polynomial,
    standard_template,
)
