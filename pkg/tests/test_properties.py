"""Randomized checks of the algebraic identities, seeded from --seed or settings.json."""

import math

import pytest

from oracles import sympy_qp, sympy_value
from quandle_toolkit.constructors import alexander_cyclic, dihedral
from quandle_toolkit.core import (
    canonical_form,
    classify,
    count_profile,
    is_isomorphic,
    orbits,
    relabel,
    restrict,
    subquandle_closure,
)
from quandle_toolkit.homomorphism import all_homs, classify_hom, kqp
from quandle_toolkit.polynomial import BivariatePoly, qp, sub_qp

CASES = 1000


@pytest.fixture(scope="module")
def pool(catalogs):
    return [entry.table for order in range(1, 6) for entry in catalogs[order].entries]


@pytest.fixture(scope="module")
def latin_pool(catalogs):
    tables = [dihedral(n) for n in (3, 5, 7, 9, 11)]
    # Alexander quandles on Z_n are Latin when both a and 1 - a are units.
    tables += [
        alexander_cyclic(n, a)
        for n in (5, 7, 8, 9, 11, 13)
        for a in range(2, n)
        if math.gcd(a, n) == 1 and math.gcd(1 - a, n) == 1
    ]
    tables += [entry.table for entry in catalogs[5].entries if entry.flags.is_latin]
    return tables


@pytest.fixture(scope="module")
def symbolic(pool):
    return {table: sympy_qp(table) for table in pool}


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _shuffled(rng, table):
    return relabel(table, rng.permutation(table.order))


def test_order_and_relabelling(rng, pool):
    for _ in range(CASES):
        table = _pick(rng, pool)
        moved = _shuffled(rng, table)
        poly = qp(moved)
        assert poly == qp(table)
        assert poly.evaluate(1, 1) == table.order
        assert poly.coefficient_sum() == table.order


def test_orbit_polynomials_add_up(rng, pool):
    for _ in range(CASES):
        table = _shuffled(rng, _pick(rng, pool))
        total = BivariatePoly()
        for block in orbits(table):
            total = total + sub_qp(table, block)
        assert total == qp(table)


def test_closures_are_subquandles(rng, pool):
    for _ in range(CASES):
        table = _shuffled(rng, _pick(rng, pool))
        size = int(rng.integers(1, table.order + 1))
        seed = rng.choice(table.order, size=size, replace=False).tolist()
        closed = subquandle_closure(table, seed)
        assert sub_qp(table, closed).coefficient_sum() == len(closed)


def test_count_profile_follows_relabelling(rng, pool):
    for _ in range(CASES):
        table = _pick(rng, pool)
        sigma = rng.permutation(table.order)
        before = count_profile(table)
        after = count_profile(relabel(table, sigma))
        for element, image in enumerate(sigma.tolist()):
            assert after.r[image] == before.r[element]
            assert after.c[image] == before.c[element]


def test_isomorphism_is_symmetric_and_matches_canonical_form(rng, pool):
    by_order = {}
    for table in pool:
        by_order.setdefault(table.order, []).append(table)
    for _ in range(CASES):
        first = _pick(rng, pool)
        # Half the pairs are relabelled copies, the rest random tables of the same order.
        second = first if rng.integers(2) else _pick(rng, by_order[first.order])
        first, second = _shuffled(rng, first), _shuffled(rng, second)
        forward = is_isomorphic(first, second)
        backward = is_isomorphic(second, first)
        assert (forward is None) == (backward is None)
        assert (forward is not None) == (canonical_form(first) == canonical_form(second))
        if forward is not None:
            assert relabel(first, forward) == second
            assert relabel(second, backward) == first


def test_orbit_blocks_are_quandles(rng, pool):
    for _ in range(CASES):
        table = _shuffled(rng, _pick(rng, pool))
        for block in orbits(table):
            assert classify(restrict(table, block)).is_quandle


def test_latin_quandles_have_nst(rng, latin_pool):
    for _ in range(CASES):
        table = _shuffled(rng, _pick(rng, latin_pool))
        assert qp(table) == BivariatePoly({(1, 1): table.order})


def test_nst_implies_latin_in_the_catalog(rng, catalogs):
    entries = [entry for order in range(1, 6) for entry in catalogs[order].entries]
    for _ in range(CASES):
        entry = _pick(rng, entries)
        if entry.qp == BivariatePoly({(1, 1): entry.table.order}):
            assert classify(_shuffled(rng, entry.table)).is_latin


def test_homomorphism_polynomials(rng, catalogs):
    small = [entry.table for order in range(1, 5) for entry in catalogs[order].entries]
    checked = 0
    while checked < CASES:
        source = _shuffled(rng, _pick(rng, small))
        target = _shuffled(rng, _pick(rng, small))
        for f in all_homs(source, target):
            kind = classify_hom(f)
            poly = kqp(f)
            assert poly.coefficient_sum() == source.order
            if kind.injective:
                assert all(es >= 0 and et >= 0 for (es, et), _coeff in poly.items())
            if kind.injective and kind.surjective:
                assert poly == BivariatePoly({(0, 0): source.order})
                assert is_isomorphic(source, target) is not None
            checked += 1
            if checked >= CASES:
                break


def test_evaluation_matches_symbolic_count(rng, pool, symbolic):
    for _ in range(CASES):
        table = _pick(rng, pool)
        s0, t0 = (int(v) for v in rng.integers(-3, 4, size=2))
        assert qp(table).evaluate(s0, t0) == sympy_value(symbolic[table], s0, t0)
