"""Exact solvers and constructions for k-uniform hypergraph matching
experiments, backed by the C++ core."""

from ._core import (
    Family,
    InputError,
    KGraph,
    PreconditionError,
    aux_matching_equiv,
    check_f_superadditivity,
    closeness,
    emit_family,
    emit_kgraph,
    extend_complete3,
    f_bound,
    has_perfect_fractional,
    has_perfect_matching,
    is_saturated,
    make_D,
    make_S,
    max_fractional,
    max_matching,
    nu,
    parse_family,
    parse_kgraph,
    rainbow,
    saturate,
    stabilize,
    stabilize_family,
    verify_erdos,
    verify_rainbow,
)

__all__ = [
    "Family",
    "InputError",
    "KGraph",
    "PreconditionError",
    "aux_matching_equiv",
    "check_f_superadditivity",
    "closeness",
    "emit_family",
    "emit_kgraph",
    "extend_complete3",
    "f_bound",
    "has_perfect_fractional",
    "has_perfect_matching",
    "is_saturated",
    "make_D",
    "make_S",
    "max_fractional",
    "max_matching",
    "nu",
    "parse_family",
    "parse_kgraph",
    "rainbow",
    "saturate",
    "stabilize",
    "stabilize_family",
    "verify_erdos",
    "verify_rainbow",
]
