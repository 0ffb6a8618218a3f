# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Concrete Boolean algebras, their constants and the subalgebra C."""

__all__ = [
    "ALGEBRA_KEYWORDS",
    "AlgebraBuilder",
    "BUILTIN_ALGEBRAS",
    "BooleanAlgebra",
    "CAlgebra",
    "CompletenessVerdict",
    "ConstantFamily",
    "Element",
    "FamilyKind",
    "FiniteBooleanAlgebra",
    "FiniteCofiniteAlgebra",
    "FiniteCofiniteElement",
    "FiniteElement",
    "Minterm",
    "SparseSingletonFamily",
    "bounded_infimum",
    "builtin_algebra",
    "find_sparse_singleton_family",
    "format_element",
    "generate_subalgebra",
    "infimum_finite",
    "is_complete_in",
    "load_algebra",
    "parse_algebra",
    "resolve_algebra",
    "strip_comment",
    "subalgebra_minterms",
    "supremum_finite",
    "verify_no_supremum",
]

from .algebra_file import ALGEBRA_KEYWORDS, AlgebraBuilder, load_algebra, parse_algebra, strip_comment
from .boolean_algebra import (
    BooleanAlgebra,
    FiniteBooleanAlgebra,
    FiniteCofiniteAlgebra,
    format_element,
    infimum_finite,
    supremum_finite,
)
from .builtins import BUILTIN_ALGEBRAS, builtin_algebra, resolve_algebra
from .calgebra import CAlgebra, Minterm, generate_subalgebra, subalgebra_minterms
from .completeness import (
    CompletenessVerdict,
    SparseSingletonFamily,
    bounded_infimum,
    find_sparse_singleton_family,
    is_complete_in,
    verify_no_supremum,
)
from .elements import Element, FiniteCofiniteElement, FiniteElement
from .families import ConstantFamily, FamilyKind
