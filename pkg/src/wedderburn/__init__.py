"""Wedderburn decompositions of finite semisimple group algebras.

The library computes the decomposition of a group algebra over a finite field
into matrix rings over extension fields, validates it against independent
structural predictions, and searches for the smallest group algebra whose
decomposition contains a given target ring.
"""

from .algebra import (
    Decomposition,
    SimpleComponent,
    check_semisimple,
    split_center,
    unit_group_order,
    wedderburn,
)
from .catalog import load_catalog, resolve_group
from .cyclo import abelian_decomposition, cyclotomic_classes, predicted_degree_multiset
from .gf import FieldSpec, Polynomial, make_field, mult_order, poly_factor
from .group import (
    Group,
    abelian,
    alternating,
    conjugacy_classes,
    commutator_subgroup,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    quotient,
    sl23,
    symmetric,
)
from .inverse import (
    CompletionResult,
    RingSpec,
    find_completion,
    parse_ring_spec,
    unit_order_of_spec,
)

__version__ = "0.1.0"

__all__ = [
    "CompletionResult",
    "Decomposition",
    "FieldSpec",
    "Group",
    "Polynomial",
    "RingSpec",
    "SimpleComponent",
    "__version__",
    "abelian",
    "abelian_decomposition",
    "alternating",
    "check_semisimple",
    "commutator_subgroup",
    "conjugacy_classes",
    "cyclic",
    "cyclotomic_classes",
    "dicyclic",
    "dihedral",
    "direct_product",
    "find_completion",
    "from_cayley_table",
    "load_catalog",
    "make_field",
    "mult_order",
    "parse_ring_spec",
    "poly_factor",
    "predicted_degree_multiset",
    "quotient",
    "resolve_group",
    "sl23",
    "split_center",
    "symmetric",
    "unit_group_order",
    "unit_order_of_spec",
    "wedderburn",
]
