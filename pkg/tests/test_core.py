import pytest

from quandle_toolkit.constructors import alexander_cyclic, dihedral, trivial
from quandle_toolkit.core import (
    QuandleTable,
    canonical_form,
    classify,
    count_profile,
    is_isomorphic,
    is_subquandle,
    iter_morphisms,
    orbits,
    relabel,
    restrict,
    subquandle_closure,
)
from quandle_toolkit.errors import (
    InputError,
    MalformedInputError,
    NotASubquandleError,
    ParseError,
    UnsupportedOrderError,
)
from quandle_toolkit.table_io import format_table, parse_table_text, read_table


@pytest.mark.parametrize(
    "rows",
    [
        [[1, 2], [2, 1], [1, 1]],
        [],
        [[1, 2], [2]],
        [[1.0, 2.0], [2.0, 1.0]],
        [[1, 3], [2, 2]],
        [[0, 1], [1, 1]],
    ],
)
def test_malformed_tables_are_rejected(rows):
    with pytest.raises(MalformedInputError):
        QuandleTable.from_one_based(rows)


def test_table_is_read_only_and_one_based_round_trips():
    table = QuandleTable.from_one_based([[1, 3, 2], [3, 2, 1], [2, 1, 3]])
    assert table.order == 3
    assert table.op(0, 1) == 2
    assert table.to_one_based() == [[1, 3, 2], [3, 2, 1], [2, 1, 3]]
    with pytest.raises(ValueError):
        table.table[0, 0] = 1


def test_classify_quandles(load_table):
    dihedral3 = classify(load_table("dihedral3.txt"))
    assert dihedral3.is_quandle and dihedral3.is_latin and dihedral3.is_connected
    assert dihedral3.describe() == "quandle (Latin, connected)"

    trivial3 = classify(load_table("trivial3.txt"))
    assert trivial3.is_quandle
    assert not trivial3.is_latin and not trivial3.is_connected
    assert trivial3.describe() == "quandle"


def test_classify_non_quandles(load_table):
    assert classify(load_table("constant_rack_3_1.txt")).describe() == "rack (not a quandle)"
    assert classify(load_table("not_a_shelf.txt")).describe() == "not a shelf"
    assert classify(QuandleTable.from_one_based([[1, 1], [1, 1]])).describe() == "shelf (not a rack)"


def test_order_one_is_latin_and_connected():
    flags = classify(trivial(1))
    assert flags.is_latin and flags.is_connected


def test_count_profile_of_example_13(load_table):
    profile = count_profile(load_table("two_orbit4.txt"))
    assert profile.r == (2, 2, 4, 4)
    assert profile.c == (4, 4, 2, 2)


def test_orbits_of_example_10(load_table):
    reference = alexander_cyclic(3, 2)
    for name in ("dihedral_blocks_a.txt", "dihedral_blocks_b.txt"):
        table = load_table(name)
        blocks = orbits(table)
        assert blocks == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        for block in blocks:
            assert is_isomorphic(restrict(table, block), reference) is not None


def test_orbits_of_trivial_quandle_are_singletons():
    assert orbits(trivial(3)) == (frozenset({0}), frozenset({1}), frozenset({2}))


def test_subquandle_closure(load_table):
    table = load_table("dihedral3.txt")
    assert subquandle_closure(table, {0}) == frozenset({0})
    assert subquandle_closure(table, {0, 1}) == frozenset({0, 1, 2})


def test_is_subquandle(load_table):
    table = load_table("two_orbit4.txt")
    assert is_subquandle(table, {0, 1})
    assert is_subquandle(table, {2, 3})
    assert not is_subquandle(table, {0, 2})
    assert not is_subquandle(table, set())


def test_subset_elements_are_range_checked(load_table):
    with pytest.raises(MalformedInputError):
        is_subquandle(load_table("two_orbit4.txt"), {7})


def test_restrict(load_table):
    table = load_table("two_orbit4.txt")
    assert restrict(table, [2, 3]) == trivial(2)
    with pytest.raises(NotASubquandleError):
        restrict(table, [0, 2])


def test_relabel_is_an_isomorphism():
    table = dihedral(5)
    moved = relabel(table, [3, 0, 4, 1, 2])
    assert classify(moved) == classify(table)
    witness = is_isomorphic(table, moved)
    assert witness is not None
    rows, target = table.rows, moved.rows
    assert all(witness[rows[a][b]] == target[witness[a]][witness[b]] for a in range(5) for b in range(5))


def test_relabel_rejects_non_permutations():
    with pytest.raises(MalformedInputError):
        relabel(trivial(3), [0, 0, 1])


def test_example_10_tables_are_not_isomorphic(load_table):
    assert is_isomorphic(load_table("dihedral_blocks_a.txt"), load_table("dihedral_blocks_b.txt")) is None


def test_isomorphism_needs_equal_orders():
    assert is_isomorphic(trivial(2), trivial(3)) is None


def test_canonical_form_is_relabelling_invariant():
    table = alexander_cyclic(5, 2)
    expected = canonical_form(table)
    for sigma in ([1, 2, 3, 4, 0], [4, 3, 2, 1, 0], [0, 2, 4, 1, 3]):
        assert canonical_form(relabel(table, sigma)) == expected


def test_canonical_form_is_lexicographically_least():
    table = QuandleTable.from_one_based([[1, 1, 1], [3, 2, 2], [2, 3, 3]])
    best = canonical_form(table).flat()
    for sigma in ([0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]):
        assert best <= relabel(table, sigma).flat()


def test_canonical_form_order_cap():
    with pytest.raises(UnsupportedOrderError):
        canonical_form(trivial(9))
    with pytest.raises(UnsupportedOrderError):
        canonical_form(trivial(3), max_order=2)
    assert canonical_form(trivial(3), max_order=3) == trivial(3)


def test_iter_morphisms_is_lexicographic():
    maps = list(iter_morphisms(trivial(2), trivial(2)))
    assert maps == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(iter_morphisms(trivial(2), trivial(2), bijective=True)) == [(0, 1), (1, 0)]


def test_parse_table_text_skips_comments_and_blank_lines():
    table = parse_table_text("# comment\n\n2\n# between rows\n1 1\n2 2\n")
    assert table == trivial(2)


def test_format_table_is_parseable():
    table = dihedral(5)
    assert parse_table_text(format_table(table, comment="dihedral 5")) == table


@pytest.mark.parametrize(
    "text",
    ["", "x\n1\n", "2\n1 1\n", "2\n1 1 1\n2 2 2\n", "0\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_table_text(text)


def test_read_table_errors(fixture_path, tmp_path):
    with pytest.raises(ParseError):
        read_table(fixture_path("bad_syntax.txt"))
    with pytest.raises(MalformedInputError):
        read_table(fixture_path("bad_entry.txt"))
    with pytest.raises(InputError, match="cannot read"):
        read_table(str(tmp_path / "missing.txt"))
