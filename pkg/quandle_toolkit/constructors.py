"""Standard quandle and rack families written out as explicit tables."""

from __future__ import annotations

import itertools
import logging
import math
from typing import Sequence

import numpy as np
from sympy import isprime
from sympy.combinatorics.named_groups import SymmetricGroup

from constants import DEFAULT_SYMPLECTIC_MAX_ORDER
from quandle_toolkit.core import QuandleTable, as_table
from quandle_toolkit.errors import (
    InvalidParameterError,
    NotAGroupError,
    UnsupportedOrderError,
)

_logger = logging.getLogger(__name__)


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise InvalidParameterError(f"{name} must be at least 1, got {n}")


def trivial(n: int) -> QuandleTable:
    _require_positive(n)
    return QuandleTable(np.repeat(np.arange(n)[:, None], n, axis=1))


def linear_table(n: int, a: int, b: int, c: int) -> QuandleTable:
    """x▷y = a·x + b·y + c mod n, whatever axioms that happens to satisfy."""
    _require_positive(n)
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return QuandleTable((a * x + b * y + c) % n)


def alexander_cyclic(n: int, a: int) -> QuandleTable:
    _require_positive(n)
    if math.gcd(a % n, n) != 1 and n > 1:
        raise InvalidParameterError(f"t={a} is not invertible modulo {n}")
    return linear_table(n, a, 1 - a, 0)


def dihedral(n: int) -> QuandleTable:
    _require_positive(n)
    return linear_table(n, -1, 2, 0)


def constant_rack(n: int, k: int) -> QuandleTable:
    """i▷j = i + k mod n; a quandle only when k = 0."""
    _require_positive(n)
    return linear_table(n, 1, 0, k)


def cyclic_group(n: int) -> QuandleTable:
    _require_positive(n)
    return linear_table(n, 1, 1, 0)


def symmetric_group(k: int) -> QuandleTable:
    """Cayley table of S_k, elements in sympy's generation order."""
    _require_positive(k, "k")
    elements = list(SymmetricGroup(k).generate_schreier_sims(af=False))
    index = {element: position for position, element in enumerate(elements)}
    return QuandleTable([[index[x * y] for y in elements] for x in elements])


def check_group(table: object) -> int:
    """Return the identity index of a Cayley table, or raise NotAGroupError."""
    table = as_table(table)
    arr = table.table
    n = table.order
    elements = np.arange(n)
    identities = [
        e for e in range(n)
        if np.array_equal(arr[e, :], elements) and np.array_equal(arr[:, e], elements)
    ]
    if not identities:
        raise NotAGroupError("Cayley table has no identity element")
    identity = identities[0]
    if not np.array_equal(arr[arr[:, :, None], elements[None, None, :]], arr[elements[:, None, None], arr[None, :, :]]):
        raise NotAGroupError("Cayley table is not associative")
    if not np.all((arr == identity).sum(axis=1) == 1):
        raise NotAGroupError("some element has no inverse")
    return identity


def _inverses(arr: np.ndarray, identity: int) -> np.ndarray:
    return np.argmax(arr == identity, axis=1)


def conjugation(group: object, nfold: int = 1) -> QuandleTable:
    """x▷y = y^-n x y^n on a group given by its Cayley table."""
    group = as_table(group)
    if nfold < 0:
        raise InvalidParameterError(f"n-fold conjugation needs n >= 0, got {nfold}")
    identity = check_group(group)
    arr = group.table
    power = np.full(group.order, identity)
    for _step in range(nfold):
        power = arr[power, np.arange(group.order)]
    inverse_power = _inverses(arr, identity)[power]
    x = np.arange(group.order)[:, None]
    # (y^-n x) y^n
    left = arr[inverse_power[None, :], x]
    return QuandleTable(arr[left, power[None, :]])


def homogeneous(group: object, automorphism: Sequence[int]) -> QuandleTable:
    """x▷y = s(x y^-1) y for a group automorphism s given element-wise."""
    group = as_table(group)
    identity = check_group(group)
    arr = group.table
    n = group.order
    sigma = np.asarray(automorphism, dtype=np.int64)
    if sigma.shape != (n,) or not np.array_equal(np.sort(sigma), np.arange(n)):
        raise InvalidParameterError("automorphism must be a bijection of the group elements")
    if not np.array_equal(sigma[arr], arr[sigma[:, None], sigma[None, :]]):
        raise InvalidParameterError("map is not a group homomorphism")
    inverse = _inverses(arr, identity)
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return QuandleTable(arr[sigma[arr[x, inverse[y]]], y])


def symplectic(
    p: int,
    dimension: int = 4,
    *,
    max_order: int = DEFAULT_SYMPLECTIC_MAX_ORDER,
) -> QuandleTable:
    """x▷y = x + <x, y> y on (Z_p)^dimension with the standard alternating form."""
    if not isprime(p):
        raise InvalidParameterError(f"p must be prime, got {p}")
    if dimension < 2 or dimension % 2:
        raise InvalidParameterError(f"dimension must be a positive even number, got {dimension}")
    order = p**dimension
    if order > max_order:
        raise UnsupportedOrderError(f"symplectic quandle of order {order} exceeds the cap {max_order}")
    half = dimension // 2
    vectors = np.array(list(itertools.product(range(p), repeat=dimension)), dtype=np.int64)
    first, second = vectors[:, :half], vectors[:, half:]
    form = (first @ second.T - second @ first.T) % p
    products = (vectors[:, None, :] + form[:, :, None] * vectors[None, :, :]) % p
    weights = p ** np.arange(dimension - 1, -1, -1)
    _logger.debug("Built symplectic quandle of order %d", order)
    return QuandleTable(products @ weights)


__all__ = [
    "trivial",
    "linear_table",
    "alexander_cyclic",
    "dihedral",
    "constant_rack",
    "cyclic_group",
    "symmetric_group",
    "check_group",
    "conjugation",
    "homogeneous",
    "symplectic",
]
