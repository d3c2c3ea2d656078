"""Exhaustive enumeration of quandles of a given order up to isomorphism.

A quandle on {0..n-1} is the same thing as a choice of column permutations
σ_j (σ_j(x) = x▷j) with σ_j(j) = j and σ_k σ_j σ_k^-1 = σ_{σ_k(j)} for
every pair j, k. The search places columns in index order and propagates
that conjugation rule: placing σ_j next to an already placed σ_k either
contradicts a placed column or forces a new one.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import logging
import time
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from constants import DEFAULT_CANONICAL_MAX_ORDER, DEFAULT_ENUMERATE_MAX_ORDER
from quandle_toolkit.core import AlgebraClass, QuandleTable, canonical_form, classify
from quandle_toolkit.errors import UnsupportedOrderError
from quandle_toolkit.polynomial import BivariatePoly, qp

_logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]
Columns = tuple[Permutation, ...]


@dataclass(frozen=True)
class CatalogEntry:
    table: QuandleTable
    qp: BivariatePoly
    flags: AlgebraClass


@dataclass(frozen=True)
class Catalog:
    order: int
    entries: tuple[CatalogEntry, ...]

    @property
    def count(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_tables(cls, order: int, tables: Sequence[QuandleTable]) -> Catalog:
        return cls(
            order=order,
            entries=tuple(CatalogEntry(table, qp(table), classify(table)) for table in sorted(tables)),
        )


@dataclass(frozen=True)
class OrderFindings:
    order: int
    quandle_count: int
    nst_count: int
    latin_count: int
    counterexamples: tuple[QuandleTable, ...]
    converse_violations: tuple[QuandleTable, ...]


@dataclass(frozen=True)
class ConjectureReport:
    n_max: int
    orders: tuple[OrderFindings, ...]

    @property
    def holds(self) -> bool:
        return not any(findings.counterexamples for findings in self.orders)


def _column_candidates(n: int) -> list[list[Permutation]]:
    perms = list(itertools.permutations(range(n)))
    return [[perm for perm in perms if perm[j] == j] for j in range(n)]


def _conjugate(outer: Permutation, inner: Permutation) -> Permutation:
    result = [0] * len(outer)
    for x, image in enumerate(inner):
        result[outer[x]] = outer[image]
    return tuple(result)


def _place(columns: list[Permutation | None], column: int, perm: Permutation) -> list[Permutation | None] | None:
    columns = list(columns)
    pending = [(column, perm)]
    while pending:
        j, p = pending.pop()
        current = columns[j]
        if current is not None:
            if current != p:
                return None
            continue
        if p[j] != j:
            return None
        columns[j] = p
        for k, q in enumerate(columns):
            if q is None:
                continue
            pending.append((q[j], _conjugate(q, p)))
            pending.append((p[k], _conjugate(p, q)))
    return columns


def _search(
    columns: list[Permutation | None],
    candidates: list[list[Permutation]],
    stats: dict[str, int],
) -> Iterator[Columns]:
    try:
        column = columns.index(None)
    except ValueError:
        yield tuple(columns)
        return
    for perm in candidates[column]:
        stats["nodes"] += 1
        placed = _place(columns, column, perm)
        if placed is not None:
            yield from _search(placed, candidates, stats)


def _solutions_from_first_column(n: int, perm: Permutation) -> list[Columns]:
    candidates = _column_candidates(n)
    stats = {"nodes": 0}
    placed = _place([None] * n, 0, perm)
    if placed is None:
        return []
    return list(_search(placed, candidates, stats))


def iter_labelled_quandles(n: int, *, workers: int = 1) -> Iterator[QuandleTable]:
    """Every quandle table on {0..n-1}, one per labelling."""
    if workers <= 1:
        stats = {"nodes": 0}
        for columns in _search([None] * n, _column_candidates(n), stats):
            yield QuandleTable(np.array(columns, dtype=np.int64).T)
        _logger.debug("Order %d search visited %d nodes", n, stats["nodes"])
        return
    first_columns = _column_candidates(n)[0]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_solutions_from_first_column, itertools.repeat(n), first_columns):
            for columns in batch:
                yield QuandleTable(np.array(columns, dtype=np.int64).T)


def _table_key(table: QuandleTable) -> bytes:
    return table.table.astype(np.uint8).tobytes()


def _relabelling_keys(table: QuandleTable, perms: np.ndarray, inverses: np.ndarray) -> set[bytes]:
    arr = table.table
    moved = arr[inverses[:, :, None], inverses[:, None, :]].reshape(len(perms), -1)
    relabelled = np.take_along_axis(perms, moved, axis=1).astype(np.uint8)
    return {row.tobytes() for row in relabelled}


def enumerate_quandles(
    n: int,
    *,
    max_order: int = DEFAULT_ENUMERATE_MAX_ORDER,
    canonical_max_order: int = DEFAULT_CANONICAL_MAX_ORDER,
    workers: int = 1,
) -> Catalog:
    """All quandles of order n up to isomorphism, sorted by canonical table."""
    if not 1 <= n <= max_order:
        raise UnsupportedOrderError(f"enumeration supports orders 1..{max_order}, got {n}")
    started = time.perf_counter()
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inverses = np.argsort(perms, axis=1)
    seen: set[bytes] = set()
    representatives: list[QuandleTable] = []
    labelled = 0
    for table in iter_labelled_quandles(n, workers=workers):
        labelled += 1
        if _table_key(table) in seen:
            continue
        canonical = canonical_form(table, max_order=canonical_max_order)
        seen |= _relabelling_keys(canonical, perms, inverses)
        representatives.append(canonical)
    catalog = Catalog.from_tables(n, representatives)
    _logger.info(
        "Order %d: %d labelled quandles, %d isomorphism classes (%.2fs)",
        n,
        labelled,
        catalog.count,
        time.perf_counter() - started,
    )
    return catalog


def qp_table(catalog: Catalog) -> list[tuple[list[list[int]], str]]:
    return [(entry.table.to_one_based(), str(entry.qp)) for entry in catalog.entries]


def qp_collisions(catalog: Catalog) -> list[tuple[CatalogEntry, ...]]:
    """Groups of non-isomorphic entries that share a qp value."""
    groups: dict[BivariatePoly, list[CatalogEntry]] = defaultdict(list)
    for entry in catalog.entries:
        groups[entry.qp].append(entry)
    return [
        tuple(group)
        for poly, group in sorted(groups.items(), key=lambda item: item[0].sort_key())
        if len(group) > 1
    ]


def check_latin_conjecture(
    n_max: int,
    *,
    catalog_for: Callable[[int], Catalog] | None = None,
    max_order: int = DEFAULT_ENUMERATE_MAX_ORDER,
    workers: int = 1,
) -> ConjectureReport:
    """Look for quandles with qp = n·st that are not Latin, orders 1..n_max."""
    if not 1 <= n_max <= max_order:
        raise UnsupportedOrderError(f"conjecture check supports orders 1..{max_order}, got {n_max}")
    if catalog_for is None:
        def catalog_for(order: int) -> Catalog:
            return enumerate_quandles(order, max_order=max_order, workers=workers)

    findings = []
    for order in range(1, n_max + 1):
        catalog = catalog_for(order)
        target = BivariatePoly({(1, 1): order})
        nst = [entry for entry in catalog.entries if entry.qp == target]
        latin = [entry for entry in catalog.entries if entry.flags.is_latin]
        findings.append(
            OrderFindings(
                order=order,
                quandle_count=catalog.count,
                nst_count=len(nst),
                latin_count=len(latin),
                counterexamples=tuple(entry.table for entry in nst if not entry.flags.is_latin),
                converse_violations=tuple(entry.table for entry in latin if entry.qp != target),
            )
        )
        _logger.info("Order %d: %d quandles with qp = %s", order, len(nst), target)
    return ConjectureReport(n_max=n_max, orders=tuple(findings))


__all__ = [
    "CatalogEntry",
    "Catalog",
    "OrderFindings",
    "ConjectureReport",
    "iter_labelled_quandles",
    "enumerate_quandles",
    "qp_table",
    "qp_collisions",
    "check_latin_conjecture",
]
