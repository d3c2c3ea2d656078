"""Finite operation tables and the shelf, rack and quandle checks on them.

Tables are stored 0-based: entry (i, j) of the array is the index of
x_i ▷ x_j. Rows index the element acted on, columns the actor, so the
column of j is the right action of x_j. Conversion to and from the 1-based
matrices used in files happens in :mod:`quandle_toolkit.table_io`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from constants import DEFAULT_CANONICAL_MAX_ORDER
from quandle_toolkit.errors import (
    MalformedInputError,
    NotAQuandleError,
    NotASubquandleError,
    UnsupportedOrderError,
)

_logger = logging.getLogger(__name__)


def _coerce_array(raw: object, offset: int = 0) -> np.ndarray:
    try:
        arr = np.array(raw)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"table is not a rectangular array: {exc}") from exc
    if arr.dtype == object or arr.ndim != 2:
        raise MalformedInputError("table must be a square two-dimensional array")
    n, width = arr.shape
    if n != width:
        raise MalformedInputError(f"table is {n}x{width}, expected a square table")
    if n == 0:
        raise MalformedInputError("table of order 0 is not allowed")
    if arr.dtype.kind not in ("i", "u"):
        raise MalformedInputError("table entries must be integers")
    arr = arr.astype(np.int64) - offset
    if arr.min() < 0 or arr.max() >= n:
        low, high = offset, n - 1 + offset
        raise MalformedInputError(f"table entries must lie in {low}..{high}")
    arr.setflags(write=False)
    return arr


class QuandleTable:
    """Immutable n x n operation table of a finite magma."""

    def __init__(self, table: object) -> None:
        if isinstance(table, QuandleTable):
            self._table = table._table
        else:
            self._table = _coerce_array(table)

    @classmethod
    def from_one_based(cls, rows: object) -> QuandleTable:
        return cls(_coerce_array(rows, offset=1))

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        return self._table

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self._table.tolist())

    @cached_property
    def algebra_class(self) -> AlgebraClass:
        return _classify_array(self._table)

    def op(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def to_one_based(self) -> list[list[int]]:
        return (self._table + 1).tolist()

    def flat(self) -> tuple[int, ...]:
        return tuple(self._table.reshape(-1).tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuandleTable):
            return NotImplemented
        return np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.order, self._table.tobytes()))

    def __lt__(self, other: QuandleTable) -> bool:
        return (self.order, self.flat()) < (other.order, other.flat())

    def __repr__(self) -> str:
        return f"QuandleTable(order={self.order}, rows={self.to_one_based()})"


def as_table(table: object) -> QuandleTable:
    return table if isinstance(table, QuandleTable) else QuandleTable(table)


@dataclass(frozen=True)
class AlgebraClass:
    is_shelf: bool
    is_rack: bool
    is_quandle: bool
    is_latin: bool
    is_connected: bool

    def describe(self) -> str:
        if self.is_quandle:
            qualifiers = [
                label
                for flag, label in ((self.is_latin, "Latin"), (self.is_connected, "connected"))
                if flag
            ]
            if qualifiers:
                return f"quandle ({', '.join(qualifiers)})"
            return "quandle"
        if self.is_rack:
            return "rack (not a quandle)"
        if self.is_shelf:
            return "shelf (not a rack)"
        return "not a shelf"

    def to_dict(self) -> dict[str, bool]:
        return {
            "connected": self.is_connected,
            "latin": self.is_latin,
            "quandle": self.is_quandle,
            "rack": self.is_rack,
            "shelf": self.is_shelf,
        }


@dataclass(frozen=True)
class CountProfile:
    """Row counts r(x) and column counts c(x) of every element."""

    r: tuple[int, ...]
    c: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.r, self.c))

    def is_zero(self) -> bool:
        return not any(self.r) and not any(self.c)


def _orbit_labels(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    sources = np.repeat(np.arange(n), n)
    targets = arr.reshape(-1)
    graph = coo_matrix(
        (np.ones(n * n, dtype=np.int32), (sources, targets)),
        shape=(n, n),
    )
    _count, labels = connected_components(graph, directed=True, connection="weak")
    return labels


def _classify_array(arr: np.ndarray) -> AlgebraClass:
    n = arr.shape[0]
    elements = np.arange(n)
    # lhs[a, b, c] = (a▷b)▷c, rhs[a, b, c] = (a▷c)▷(b▷c)
    lhs = arr[arr[:, :, None], elements[None, None, :]]
    rhs = arr[arr[:, None, :], arr[None, :, :]]
    is_shelf = bool(np.array_equal(lhs, rhs))
    columns_bijective = bool(np.all(np.sort(arr, axis=0) == elements[:, None]))
    is_rack = is_shelf and columns_bijective
    is_quandle = is_rack and bool(np.all(np.diagonal(arr) == elements))
    rows_bijective = bool(np.all(np.sort(arr, axis=1) == elements[None, :]))
    is_latin = is_quandle and rows_bijective
    is_connected = is_quandle and len(set(_orbit_labels(arr).tolist())) == 1
    return AlgebraClass(is_shelf, is_rack, is_quandle, is_latin, is_connected)


def classify(table: object) -> AlgebraClass:
    """Exhaustively check the shelf, rack and quandle axioms."""
    return as_table(table).algebra_class


def require_rack(table: object, operation: str = "this operation") -> QuandleTable:
    table = as_table(table)
    if not table.algebra_class.is_rack:
        raise NotAQuandleError(f"{operation} needs a rack or quandle; got {table.algebra_class.describe()}")
    return table


def require_quandle(table: object, operation: str = "this operation") -> QuandleTable:
    table = as_table(table)
    if not table.algebra_class.is_quandle:
        raise NotAQuandleError(f"{operation} needs a quandle; got {table.algebra_class.describe()}")
    return table


def count_profile(table: object) -> CountProfile:
    arr = as_table(table).table
    fixed = arr == np.arange(arr.shape[0])[:, None]
    return CountProfile(
        r=tuple(fixed.sum(axis=1).tolist()),
        c=tuple(fixed.sum(axis=0).tolist()),
    )


def orbits(table: object) -> tuple[frozenset[int], ...]:
    """Orbit decomposition, blocks ordered by their smallest element."""
    labels = _orbit_labels(as_table(table).table)
    blocks: dict[int, list[int]] = {}
    for element, label in enumerate(labels.tolist()):
        blocks.setdefault(label, []).append(element)
    return tuple(sorted((frozenset(block) for block in blocks.values()), key=min))


def _check_elements(table: QuandleTable, subset: Iterable[int]) -> set[int]:
    members = set()
    for element in subset:
        if isinstance(element, bool) or not isinstance(element, (int, np.integer)):
            raise MalformedInputError(f"element {element!r} is not an integer")
        if not 0 <= element < table.order:
            raise MalformedInputError(f"element {int(element) + 1} is outside 1..{table.order}")
        members.add(int(element))
    return members


def subquandle_closure(table: object, seed: Iterable[int]) -> frozenset[int]:
    table = as_table(table)
    rows = table.rows
    members = _check_elements(table, seed)
    while True:
        products = {rows[a][b] for a in members for b in members}
        if products <= members:
            return frozenset(members)
        members |= products


def is_subquandle(table: object, subset: Iterable[int]) -> bool:
    table = as_table(table)
    members = _check_elements(table, subset)
    return bool(members) and subquandle_closure(table, members) == members


def restrict(table: object, subset: Iterable[int]) -> QuandleTable:
    """The structure on a closed subset, relabelled 0..k-1 in ascending order."""
    table = as_table(table)
    members = sorted(_check_elements(table, subset))
    if not members or subquandle_closure(table, members) != set(members):
        raise NotASubquandleError(
            f"{{{', '.join(str(m + 1) for m in members)}}} is not closed under the operation"
        )
    index = {element: position for position, element in enumerate(members)}
    rows = table.rows
    return QuandleTable([[index[rows[a][b]] for b in members] for a in members])


def relabel(table: object, sigma: Sequence[int]) -> QuandleTable:
    """Apply sigma (old index -> new index) to every element of the table."""
    table = as_table(table)
    n = table.order
    sig = np.asarray(sigma, dtype=np.int64)
    if sig.shape != (n,) or not np.array_equal(np.sort(sig), np.arange(n)):
        raise MalformedInputError(f"relabelling must be a permutation of 0..{n - 1}")
    inverse = np.argsort(sig)
    return QuandleTable(sig[table.table[np.ix_(inverse, inverse)]])


def _constraint_triples(rows: Sequence[Sequence[int]]) -> list[list[tuple[int, int, int]]]:
    # Triple (a, b, a▷b) is checked once the largest of its three indices is assigned.
    n = len(rows)
    levels: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            product = rows[a][b]
            levels[max(a, b, product)].append((a, b, product))
    return levels


def iter_morphisms(
    source: object,
    target: object,
    *,
    bijective: bool = False,
    first_images: Iterable[int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every map f with f(a▷b) = f(a)▷f(b), in lexicographic order."""
    source = as_table(source)
    target = as_table(target)
    n, m = source.order, target.order
    if bijective and n != m:
        return
    target_rows = target.rows
    levels = _constraint_triples(source.rows)
    if bijective:
        source_profile = count_profile(source).pairs()
        target_profile = count_profile(target).pairs()
        candidates = [
            tuple(y for y in range(m) if target_profile[y] == source_profile[x])
            for x in range(n)
        ]
    else:
        candidates = [tuple(range(m))] * n
    if first_images is not None:
        allowed = set(first_images)
        candidates = [tuple(y for y in candidates[0] if y in allowed)] + list(candidates[1:])
    images = [-1] * n
    used = [False] * m

    def extend(x: int) -> Iterator[tuple[int, ...]]:
        if x == n:
            yield tuple(images)
            return
        for y in candidates[x]:
            if bijective and used[y]:
                continue
            images[x] = y
            if all(images[w] == target_rows[images[a]][images[b]] for a, b, w in levels[x]):
                used[y] = bijective
                yield from extend(x + 1)
                used[y] = False
        images[x] = -1

    yield from extend(0)


def is_isomorphic(first: object, second: object) -> tuple[int, ...] | None:
    """Return a relabelling f with f(x▷y) = f(x)▷f(y), or None."""
    first = as_table(first)
    second = as_table(second)
    if first.order != second.order:
        return None
    if sorted(count_profile(first).pairs()) != sorted(count_profile(second).pairs()):
        return None
    return next(iter_morphisms(first, second, bijective=True), None)


def canonical_form(table: object, *, max_order: int = DEFAULT_CANONICAL_MAX_ORDER) -> QuandleTable:
    """Lexicographically least row-major table over all relabellings."""
    table = as_table(table)
    n = table.order
    if n > max_order:
        raise UnsupportedOrderError(f"canonical form supports orders up to {max_order}, got {n}")
    rows = table.rows
    new_to_old = [0] * n
    old_to_new = [-1] * n
    best: list[int] | None = None

    def prefix_allows(assigned: int) -> bool:
        # Only row 0 of the relabelled table is (partly) known before the leaf.
        if best is None:
            return True
        first = new_to_old[0]
        for column in range(assigned):
            value = old_to_new[rows[first][new_to_old[column]]]
            bound = best[column]
            if value < 0:
                return bound >= assigned
            if value != bound:
                return value < bound
        return True

    def search(assigned: int) -> None:
        nonlocal best
        if assigned == n:
            flat = [
                old_to_new[rows[new_to_old[p]][new_to_old[q]]]
                for p in range(n)
                for q in range(n)
            ]
            if best is None or flat < best:
                best = flat
            return
        for old in range(n):
            if old_to_new[old] >= 0:
                continue
            new_to_old[assigned] = old
            old_to_new[old] = assigned
            if prefix_allows(assigned + 1):
                search(assigned + 1)
            old_to_new[old] = -1

    search(0)
    return QuandleTable(np.array(best, dtype=np.int64).reshape(n, n))


__all__ = [
    "QuandleTable",
    "AlgebraClass",
    "CountProfile",
    "as_table",
    "classify",
    "require_rack",
    "require_quandle",
    "count_profile",
    "orbits",
    "subquandle_closure",
    "is_subquandle",
    "restrict",
    "relabel",
    "iter_morphisms",
    "is_isomorphic",
    "canonical_form",
]
