"""Edge-critical uniquely 3-colourable planar graphs."""

from ._core import (
    Graph,
    InputError,
    PreconditionError,
    TheoremViolation,
    are_isomorphic,
    audit,
    bound_report,
    chromatic_value,
    classify,
    decompose,
    fixture,
    fixture_names,
    hunt,
    is_planar,
    is_uniquely_3_colorable,
    lower_line,
    size,
    upper_line,
)

__all__ = [
    "Graph",
    "InputError",
    "PreconditionError",
    "TheoremViolation",
    "are_isomorphic",
    "audit",
    "bound_report",
    "chromatic_value",
    "classify",
    "decompose",
    "fixture",
    "fixture_names",
    "hunt",
    "is_planar",
    "is_uniquely_3_colorable",
    "lower_line",
    "size",
    "upper_line",
]
