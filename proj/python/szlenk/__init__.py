"""Cantor normal form ordinals and the Szlenk indices of C([0, alpha])."""

from ._szlenk import (
    DomainError,
    Ordinal,
    OrdinalOverflowError,
    ParseError,
    Space,
    bounds,
    canonical_representative,
    cb_height,
    cb_quotient,
    decompose,
    dentability_index,
    dirac_rank,
    gamma,
    isomorphic,
    left_difference,
    left_divmod,
    normalize,
    parse,
    szlenk_index,
)

w = Ordinal.omega()

__all__ = [
    "DomainError",
    "Ordinal",
    "OrdinalOverflowError",
    "ParseError",
    "Space",
    "bounds",
    "canonical_representative",
    "cb_height",
    "cb_quotient",
    "decompose",
    "dentability_index",
    "dirac_rank",
    "gamma",
    "isomorphic",
    "left_difference",
    "left_divmod",
    "normalize",
    "parse",
    "szlenk_index",
    "w",
]
