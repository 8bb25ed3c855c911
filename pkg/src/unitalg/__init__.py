"""Exact toolkit for finite-dimensional algebras and their units."""

from .algebra import (
    AlgebraCtx,
    AlgElem,
    IdealBasis,
    algebra_from_json,
    algebra_to_json,
    dual_numbers,
    group_ring,
    inverse,
    is_unit,
    jacobson_radical,
    matrix_algebra,
    product,
    quotient_by_ideal,
    regular_representation,
    total_split,
    unit_polynomial,
    upper_triangular,
)
from .errors import CapExceededError, FieldMismatchError, InvalidInputError, UnitAlgError
from .field import GF, QQ, FieldCtx, FieldElem, make_field
from .identities import (
    cauchy_davenport_check,
    glynn_coefficient,
    monomial_character_sum,
    power_sum_subgroup,
)
from .modules import AModule, find_generator, find_isomorphism, hom_space, summand_test
from .multipoly import GridSpec, MultiPoly, cn_certify, cn_witness, in_D, linear_substitute, reduce_mod_grid
from .normalbasis import GaloisCtx, find_normal_generator, is_normal_by_rank, is_normal_generator
from .unitsearch import (
    SubgroupSpec,
    count_units_in_span,
    find_unit_char_zero,
    find_unit_in_coset,
    find_unit_in_span,
    split_unit_basis,
    verify_unit_basis,
)

__version__ = "0.1.0"
