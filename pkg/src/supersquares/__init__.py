"""Mutually orthogonal supersquares and extraordinary supersquares over GF(p^n)."""

from .constructions import (
    CompleteSet,
    basis_fan,
    complete_set_to_squares,
    example_set_d4,
    extraordinary_through,
    type_I,
    type_II,
)
from .errors import (
    DeterminantNotOne,
    InvalidArgument,
    InvalidPartition,
    NotABasis,
    UnsupportedOrder,
)
from .finite_field import Field, field_of_order, make_field
from .squares import (
    CyclicGroup,
    FieldGroup,
    Square,
    SquareTaxonomy,
    are_orthogonal,
    classify,
    mutually_orthogonal,
    render,
    square_from_partition,
    supersquare,
)
from .vector_space import Subgroup, det, is_extraordinary, span_additive, span_line

__version__ = "0.1.0"
