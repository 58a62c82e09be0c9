"""Canonical degree, bi-canonical degree and AGL-type classification of
numerical semigroup rings k[[H]]."""

from .degrees import (
    DegreeReport,
    bideg,
    canonical_powers,
    cdeg,
    classify,
    comparison,
    mm_analysis,
)
from .errors import (
    GcdNotOne,
    GorensteinCase,
    InternalMismatch,
    IsFullMonoid,
    SemigroupError,
)
from .ideals import RelativeIdeal, canonical_ideal, principal
from .semigroup import NumericalSemigroup, SemigroupProfile

__all__ = [
    "DegreeReport",
    "GcdNotOne",
    "GorensteinCase",
    "InternalMismatch",
    "IsFullMonoid",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SemigroupError",
    "SemigroupProfile",
    "bideg",
    "canonical_ideal",
    "canonical_powers",
    "cdeg",
    "classify",
    "comparison",
    "mm_analysis",
    "principal",
]
