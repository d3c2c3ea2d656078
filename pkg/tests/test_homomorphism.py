import itertools

import pytest

from oracles import brute_homs
from quandle_toolkit.constructors import alexander_cyclic, dihedral, trivial
from quandle_toolkit.core import relabel, subquandle_closure
from quandle_toolkit.errors import MalformedInputError, NotAHomomorphismError, NotAQuandleError
from quandle_toolkit.homomorphism import (
    HomClass,
    Homomorphism,
    all_homs,
    automorphisms,
    classify_hom,
    image,
    is_isomorphism,
    kqp,
)
from quandle_toolkit.polynomial import BivariatePoly, parse_text


def test_every_map_between_trivial_quandles():
    homs = all_homs(trivial(2), trivial(3))
    assert len(homs) == 9
    assert [f.mapping for f in homs] == list(itertools.product(range(3), repeat=2))


def test_endomorphisms_of_dihedral_3():
    homs = all_homs(dihedral(3), dihedral(3))
    assert len(homs) == 9
    assert sum(1 for f in homs if is_isomorphism(f)) == 6
    assert sum(1 for f in homs if len(image(f)) == 1) == 3


def test_matches_brute_force(catalogs):
    tables = [entry.table for order in (1, 2, 3) for entry in catalogs[order].entries]
    tables.append(catalogs[4].entries[-1].table)
    for source, target in itertools.product(tables, repeat=2):
        found = [f.mapping for f in all_homs(source, target)]
        assert found == brute_homs(source, target)


def test_thread_pool_gives_the_same_list():
    source, target = dihedral(3), alexander_cyclic(5, 2)
    serial = all_homs(source, target)
    assert all_homs(source, target, workers=3) == serial
    assert all_homs(trivial(2), target, workers=4) == all_homs(trivial(2), target)


def test_all_homs_needs_quandles(load_table):
    with pytest.raises(NotAQuandleError):
        all_homs(load_table("constant_rack_3_1.txt"), trivial(2))


def test_constant_map_polynomial():
    f = Homomorphism(trivial(2), trivial(3), (0, 0))
    assert str(kqp(f)) == "2st"
    assert classify_hom(f) == HomClass(injective=False, surjective=False)


def test_isomorphisms_have_constant_polynomial():
    for f in automorphisms(dihedral(3)):
        assert kqp(f) == BivariatePoly({(0, 0): 3})
        assert str(kqp(f)) == "3"
    assert len(automorphisms(dihedral(3))) == 6
    assert len(automorphisms(trivial(3))) == 6


def test_inclusion_of_a_subquandle(load_table):
    f = Homomorphism(trivial(2), load_table("two_orbit4.txt"), (0, 1))
    assert classify_hom(f) == HomClass(injective=True, surjective=False)
    assert str(kqp(f)) == "2t^2"


def test_surjection_can_have_negative_exponents(load_table):
    # Collapsing the orbit {1, 2} onto one point of T_3.
    f = Homomorphism(load_table("two_orbit4.txt"), trivial(3), (0, 0, 1, 2))
    assert classify_hom(f) == HomClass(injective=False, surjective=True)
    assert kqp(f) == parse_text("2st^-1 + 2s^-1t")


def test_one_based_construction():
    f = Homomorphism.from_one_based(trivial(2), trivial(3), [3, 1])
    assert f.mapping == (2, 0)
    assert f(1) == 0
    assert f.to_one_based() == [3, 1]


def test_invalid_maps():
    with pytest.raises(NotAHomomorphismError):
        Homomorphism(dihedral(3), trivial(2), (0, 1, 1))
    with pytest.raises(MalformedInputError):
        Homomorphism(trivial(2), trivial(3), (0,))
    with pytest.raises(MalformedInputError):
        Homomorphism(trivial(2), trivial(3), (0, 3))


def test_images_are_subquandles():
    target = dihedral(6)
    homs = all_homs(dihedral(3), target)
    assert any(len(image(f)) == 3 for f in homs)
    for f in homs:
        hit = image(f)
        assert subquandle_closure(target, hit) == hit


def test_count_is_relabelling_invariant():
    source, target = dihedral(3), dihedral(6)
    expected = len(all_homs(source, target))
    moved = len(all_homs(relabel(source, [2, 0, 1]), relabel(target, [5, 3, 1, 0, 2, 4])))
    assert moved == expected
