"""Sparse integer Laurent polynomials and the quandle polynomial qp.

Terms are kept in ascending lexicographic order of their exponents; that
order is what canonical text and JSON renderings use, so two polynomials
are equal exactly when their canonical texts are.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from constants import POLY_VARIABLES, ZPOLY_VARIABLE
from quandle_toolkit.core import count_profile, is_subquandle, require_rack
from quandle_toolkit.errors import EvaluationDomainError, NotASubquandleError, ParseError

Number = int | Fraction


def _power(base: int, exponent: int, name: str) -> Number:
    if exponent >= 0:
        return base**exponent
    if base == 0:
        raise EvaluationDomainError(f"cannot raise {name}=0 to the power {exponent}")
    return Fraction(1, base**-exponent)


def _as_exact(value: Number) -> Number:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _render_monomial(exponents: tuple[int, ...], variables: tuple[str, ...]) -> str:
    parts = []
    for name, exponent in zip(variables, exponents):
        if exponent == 0:
            continue
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return "".join(parts)


def _render(items: list[tuple[tuple[int, ...], int]], variables: tuple[str, ...]) -> str:
    if not items:
        return "0"
    chunks = []
    for index, (exponents, coeff) in enumerate(items):
        monomial = _render_monomial(exponents, variables)
        magnitude = abs(coeff)
        body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"
        if index == 0:
            chunks.append(f"-{body}" if coeff < 0 else body)
        else:
            chunks.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(chunks)


def _parse_terms(text: str, variables: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    compact = re.sub(r"\s+", "", text).replace("{", "").replace("}", "")
    if not compact:
        raise ParseError("empty polynomial text")
    var_pattern = "".join(rf"(?:({name})(?:\^(-?\d+))?)?" for name in variables)
    term_re = re.compile(rf"([+-]?)(\d*){var_pattern}")
    totals: Counter[tuple[int, ...]] = Counter()
    for piece in re.split(r"(?<!\^)(?=[+-])", compact):
        if not piece:
            continue
        match = term_re.fullmatch(piece)
        if not match:
            raise ParseError(f"cannot parse term {piece!r} in {text!r}")
        sign, digits = match.group(1), match.group(2)
        exponents = []
        has_variable = False
        for position in range(len(variables)):
            name = match.group(3 + 2 * position)
            power = match.group(4 + 2 * position)
            if name:
                has_variable = True
                exponents.append(int(power) if power is not None else 1)
            else:
                exponents.append(0)
        if not digits and not has_variable:
            raise ParseError(f"cannot parse term {piece!r} in {text!r}")
        coeff = int(digits) if digits else 1
        totals[tuple(exponents)] += -coeff if sign == "-" else coeff
    return {key: value for key, value in totals.items() if value}


class _LaurentPoly:
    variables: tuple[str, ...] = ()

    def __init__(self, terms: Mapping[object, int] | None = None) -> None:
        cleaned: dict[tuple[int, ...], int] = {}
        for key, coeff in (terms or {}).items():
            exponents = self._exponents(key)
            cleaned[exponents] = cleaned.get(exponents, 0) + int(coeff)
        self._terms = {key: value for key, value in sorted(cleaned.items()) if value}

    @classmethod
    def _exponents(cls, key: object) -> tuple[int, ...]:
        exponents = tuple(int(value) for value in key)
        if len(exponents) != len(cls.variables):
            raise ValueError(f"expected {len(cls.variables)} exponents, got {key!r}")
        return exponents

    @classmethod
    def parse(cls, text: str):
        return cls._from_exponents(_parse_terms(text, cls.variables))

    @classmethod
    def _from_exponents(cls, terms: Mapping[tuple[int, ...], int]):
        poly = cls.__new__(cls)
        poly._terms = {key: value for key, value in sorted(terms.items()) if value}
        return poly

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return list(self._terms.items())

    def sort_key(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return tuple(self._terms.items())

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.sort_key()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        merged = Counter(self._terms)
        merged.update(other._terms)
        return self._from_exponents(merged)

    def __neg__(self):
        return self._from_exponents({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __str__(self) -> str:
        return _render(self.items(), self.variables)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class BivariatePoly(_LaurentPoly):
    """Laurent polynomial in s and t with integer coefficients."""

    variables = POLY_VARIABLES

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def evaluate(self, s0: int, t0: int) -> Number:
        total: Number = 0
        for (es, et), coeff in self._terms.items():
            total += coeff * _power(s0, es, "s") * _power(t0, et, "t")
        return _as_exact(total)

    def specialize(self, *, s: int | None = None, t: int | None = None) -> BivariatePoly:
        collapsed: Counter[tuple[int, int]] = Counter()
        for (es, et), coeff in self._terms.items():
            value: Number = coeff
            if s is not None:
                value *= _power(s, es, "s")
                es = 0
            if t is not None:
                value *= _power(t, et, "t")
                et = 0
            value = _as_exact(value)
            if isinstance(value, Fraction):
                raise EvaluationDomainError("specialization leaves a non-integer coefficient")
            collapsed[(es, et)] += value
        return BivariatePoly._from_exponents(collapsed)

    def total_degrees(self) -> list[int]:
        return [es + et for es, et in self._terms]

    def total_degree_range(self) -> tuple[int, int] | None:
        degrees = self.total_degrees()
        return (min(degrees), max(degrees)) if degrees else None

    def to_json(self) -> list[dict[str, int]]:
        return [{"coeff": coeff, "es": es, "et": et} for (es, et), coeff in self._terms.items()]

    @classmethod
    def from_json(cls, payload: list[dict[str, int]]) -> BivariatePoly:
        try:
            return cls({(item["es"], item["et"]): item["coeff"] for item in payload})
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"invalid polynomial JSON: {exc}") from exc


class ZPoly(_LaurentPoly):
    """Laurent polynomial in z; exponents are plain integers."""

    variables = (ZPOLY_VARIABLE,)

    @classmethod
    def _exponents(cls, key: object) -> tuple[int, ...]:
        if isinstance(key, tuple):
            return super()._exponents(key)
        return (int(key),)

    @property
    def terms(self) -> dict[int, int]:
        return {key[0]: value for key, value in self._terms.items()}

    def evaluate(self, z0: int) -> Number:
        total: Number = 0
        for (ez,), coeff in self._terms.items():
            total += coeff * _power(z0, ez, "z")
        return _as_exact(total)

    def to_json(self) -> list[dict[str, int]]:
        return [{"coeff": coeff, "ez": ez} for (ez,), coeff in self._terms.items()]


class PolyMultiset:
    """Multiset of BivariatePoly values, e.g. the invariant Φ_qp."""

    def __init__(self, entries: Mapping[BivariatePoly, int] | None = None) -> None:
        counts: Counter[BivariatePoly] = Counter()
        for poly, multiplicity in (entries or {}).items():
            if multiplicity < 0:
                raise ValueError("multiplicities must be non-negative")
            counts[poly] += multiplicity
        self._counts = {
            poly: counts[poly]
            for poly in sorted(counts, key=lambda item: item.sort_key())
            if counts[poly]
        }

    @classmethod
    def from_iterable(cls, polys: Iterable[BivariatePoly]) -> PolyMultiset:
        return cls(Counter(polys))

    def items(self) -> list[tuple[BivariatePoly, int]]:
        return list(self._counts.items())

    def multiplicity(self, poly: BivariatePoly) -> int:
        return self._counts.get(poly, 0)

    def total(self) -> int:
        return sum(self._counts.values())

    def specialize(self, s0: int, t0: int) -> ZPoly:
        exponents: Counter[int] = Counter()
        for poly, multiplicity in self._counts.items():
            value = poly.evaluate(s0, t0)
            if isinstance(value, Fraction):
                raise EvaluationDomainError(f"{poly} at ({s0}, {t0}) is not an integer exponent")
            exponents[value] += multiplicity
        return ZPoly(exponents)

    def to_json(self) -> list[dict[str, object]]:
        return [{"multiplicity": count, "qp": str(poly)} for poly, count in self._counts.items()]

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __str__(self) -> str:
        return "{" + ", ".join(f"{poly}: {count}" for poly, count in self._counts.items()) + "}"

    def __repr__(self) -> str:
        return f"PolyMultiset({self})"


def _profile_poly(pairs: Iterable[tuple[int, int]]) -> BivariatePoly:
    return BivariatePoly(Counter(pairs))


def qp(table: object) -> BivariatePoly:
    """Sum over elements of s^r(x) t^c(x)."""
    table = require_rack(table, "qp")
    return _profile_poly(count_profile(table).pairs())


def paper_convention_qp(table: object) -> BivariatePoly:
    # A rack whose every row and column count is 0 is reported as 0 rather than n.
    table = require_rack(table, "qp")
    profile = count_profile(table)
    if profile.is_zero():
        return BivariatePoly()
    return _profile_poly(profile.pairs())


def sub_qp(table: object, subset: Iterable[int]) -> BivariatePoly:
    """Subquandle polynomial; counts are taken in the ambient table."""
    table = require_rack(table, "sub_qp")
    members = set(subset)
    if not is_subquandle(table, members):
        listed = ", ".join(str(element + 1) for element in sorted(members))
        raise NotASubquandleError(f"{{{listed}}} is not a subquandle")
    pairs = count_profile(table).pairs()
    return _profile_poly(pairs[element] for element in members)


def evaluate(poly: BivariatePoly, s0: int, t0: int) -> Number:
    return poly.evaluate(s0, t0)


def row_poly(table: object) -> BivariatePoly:
    return qp(table).specialize(t=1)


def col_poly(table: object) -> BivariatePoly:
    return qp(table).specialize(s=1)


def canonical_text(poly: BivariatePoly | ZPoly) -> str:
    return str(poly)


def parse_text(text: str) -> BivariatePoly:
    return BivariatePoly.parse(text)


def qp_admissible(poly: BivariatePoly, order: int, *, rack: bool = False) -> bool:
    """Necessary conditions for poly to be the qp of some order-n quandle."""
    low = 0 if rack else 2
    return (
        all(coeff > 0 for _exponents, coeff in poly.items())
        and poly.coefficient_sum() == order
        and all(es >= 0 and et >= 0 for (es, et), _coeff in poly.items())
        and all(low <= degree <= 2 * order for degree in poly.total_degrees())
    )


__all__ = [
    "BivariatePoly",
    "ZPoly",
    "PolyMultiset",
    "qp",
    "paper_convention_qp",
    "sub_qp",
    "evaluate",
    "row_poly",
    "col_poly",
    "canonical_text",
    "parse_text",
    "qp_admissible",
]
