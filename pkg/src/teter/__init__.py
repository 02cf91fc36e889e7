"""Canonical traces and Teter type for Artinian monomial algebras."""
from .monomial import (
    MonomialIdeal,
    colon,
    is_artinian,
    parse_ideal,
    power_of_maximal_ideal,
    socle_monomials,
    standard_monomials,
)
from .poset import DivisorPoset, PosetIdealView, build_divisor_poset, ideal_view, to_dot
from .homs import (
    TraceReport,
    are_companions,
    candidate_degrees,
    degree_image,
    hom_components,
    is_symmetric,
    is_tau_ideal,
    natural_tau_ideal,
    teter_number_multigraded,
    teter_type_multigraded,
    trace_multigraded,
)

__version__ = "0.1.0"
