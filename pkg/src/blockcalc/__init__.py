"""Exact algebra for building GL2-type varieties from cocycle data."""

from .classify import (
    EndomorphismDatum,
    albert_filter,
    building_block_check,
    dimension_bookkeeping,
    factor_pattern_filter,
    is_gl2_type,
)
from .cohom import (
    Cocycle2,
    CoefficientBasis,
    FiniteGroup,
    MultiplicativeValue,
    adjust_splitting_map,
    class_order,
    coboundary_of,
    epsilon_character,
    is_cocycle,
    split_cocycle,
    splitting_field_of,
)
from .csa import (
    AbelianFieldSpec,
    PlaceQ,
    QuaternionAlgebraQ,
    grunwald_wang_search,
    hilbert_symbol,
    min_cyclotomic_splitting,
    ramification_data,
    splits,
)
from .cyclo import CyclotomicElement, RootOfUnity, galois_act, generated_subfield, sqrt_as_cyclotomic
from .matalg import (
    Ambient,
    MatrixOverB,
    SubalgebraSpec,
    centralizer,
    companion_embedding,
    skolem_noether_conjugator,
    verify_double_centralizer,
)
