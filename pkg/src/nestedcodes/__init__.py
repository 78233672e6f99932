"""Invariants of projective nested products of fields and their evaluation codes."""

from .codes import EvaluationCode, build_code, delta_profile, min_distance, search_min_distance
from .field import FiniteField, FieldTower, build_field, subfield_elements
from .ideal import groebner_basis, hilbert_function, is_standard, normal_form, standard_monomials
from .invariants import (
    InvariantReport,
    cayley_bacharach,
    indicator_raw,
    indicator_shifted,
    invariant_report,
    m_value,
    reg_delta,
    reg_hilbert,
    standard_indicator,
    v_point,
    v_unit,
    verify_indicator,
)
from .poly import Polynomial, grlex_compare
from .variety import (
    NestedSequence,
    ProjectivePoint,
    cardinality,
    enumerate_points,
    make_point,
    parse_point,
    pivot,
    unit_point,
    validate_sequence,
)

__version__ = "0.1.0"
