"""Homomorphisms between finite quandles and the K_qp polynomial."""

from __future__ import annotations

import concurrent.futures
import logging
import time
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from quandle_toolkit.core import (
    QuandleTable,
    as_table,
    count_profile,
    iter_morphisms,
    require_quandle,
)
from quandle_toolkit.errors import MalformedInputError, NotAHomomorphismError
from quandle_toolkit.polynomial import BivariatePoly

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Homomorphism:
    source: QuandleTable
    target: QuandleTable
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        images = np.asarray(self.mapping, dtype=np.int64)
        n, m = self.source.order, self.target.order
        if images.shape != (n,):
            raise MalformedInputError(f"map needs {n} images, got {len(self.mapping)}")
        if images.min() < 0 or images.max() >= m:
            raise MalformedInputError(f"images must lie in 1..{m}")
        lhs = images[self.source.table]
        rhs = self.target.table[images[:, None], images[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = (int(v) for v in np.argwhere(lhs != rhs)[0])
            raise NotAHomomorphismError(f"f({a + 1}▷{b + 1}) != f({a + 1})▷f({b + 1})")
        object.__setattr__(self, "mapping", tuple(int(v) for v in images))

    @classmethod
    def from_one_based(cls, source: object, target: object, images: Sequence[int]) -> Homomorphism:
        return cls(as_table(source), as_table(target), tuple(int(v) - 1 for v in images))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def to_one_based(self) -> list[int]:
        return [image + 1 for image in self.mapping]


class HomClass(NamedTuple):
    injective: bool
    surjective: bool


def _homs_with_first_image(source: QuandleTable, target: QuandleTable, first: int) -> list[tuple[int, ...]]:
    return list(iter_morphisms(source, target, first_images=(first,)))


def all_homs(src: object, dst: object, *, workers: int = 1) -> list[Homomorphism]:
    """Every homomorphism src -> dst in lexicographic order of the image sequence."""
    source = require_quandle(src, "all_homs")
    target = require_quandle(dst, "all_homs")
    started = time.perf_counter()
    if workers <= 1:
        maps = list(iter_morphisms(source, target))
    else:
        maps = []
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_homs_with_first_image, source, target, first)
                for first in range(target.order)
            ]
            for future in futures:
                maps.extend(future.result())
    _logger.debug(
        "Found %d homomorphisms of order %d -> %d in %.3fs",
        len(maps),
        source.order,
        target.order,
        time.perf_counter() - started,
    )
    return [Homomorphism(source, target, mapping) for mapping in maps]


def kqp(f: Homomorphism) -> BivariatePoly:
    """Sum over x of s^(r(f(x)) - r(x)) t^(c(f(x)) - c(x))."""
    source = count_profile(f.source)
    target = count_profile(f.target)
    exponents: dict[tuple[int, int], int] = {}
    for x, image in enumerate(f.mapping):
        key = (target.r[image] - source.r[x], target.c[image] - source.c[x])
        exponents[key] = exponents.get(key, 0) + 1
    return BivariatePoly(exponents)


def image(f: Homomorphism) -> frozenset[int]:
    return frozenset(f.mapping)


def classify_hom(f: Homomorphism) -> HomClass:
    hit = image(f)
    return HomClass(
        injective=len(hit) == f.source.order,
        surjective=len(hit) == f.target.order,
    )


def is_isomorphism(f: Homomorphism) -> bool:
    return all(classify_hom(f))


def automorphisms(table: object) -> list[Homomorphism]:
    table = require_quandle(table, "automorphisms")
    return [Homomorphism(table, table, mapping) for mapping in iter_morphisms(table, table, bijective=True)]


__all__ = [
    "Homomorphism",
    "HomClass",
    "all_homs",
    "kqp",
    "image",
    "classify_hom",
    "is_isomorphism",
    "automorphisms",
]
