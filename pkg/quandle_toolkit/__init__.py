"""Finite quandles, the quandle polynomial and link coloring invariants."""

from quandle_toolkit.core import (
    AlgebraClass,
    QuandleTable,
    canonical_form,
    classify,
    count_profile,
    is_isomorphic,
    is_subquandle,
    orbits,
    relabel,
    restrict,
    subquandle_closure,
)
from quandle_toolkit.errors import DomainError, InputError, QuandleToolkitError
from quandle_toolkit.polynomial import BivariatePoly, PolyMultiset, ZPoly, qp, sub_qp

__all__ = [
    "AlgebraClass",
    "QuandleTable",
    "canonical_form",
    "classify",
    "count_profile",
    "is_isomorphic",
    "is_subquandle",
    "orbits",
    "relabel",
    "restrict",
    "subquandle_closure",
    "DomainError",
    "InputError",
    "QuandleToolkitError",
    "BivariatePoly",
    "PolyMultiset",
    "ZPoly",
    "qp",
    "sub_qp",
]
