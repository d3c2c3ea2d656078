import json
import logging
from fractions import Fraction

import pytest

from app_helpers import dump_json
from cli.output import number_json
from main import QuandleApp
from quandle_toolkit.constructors import dihedral, trivial
from quandle_toolkit.table_io import parse_table_text, read_table


@pytest.fixture
def cli(capsys, tmp_path):
    settings_path = str(tmp_path / "settings.json")

    def _run(*argv):
        app = QuandleApp(settings_path=settings_path)
        code = app.run([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return code, captured.out.rstrip("\n"), captured.err

    return _run


def test_verify(cli, fixture_path):
    assert cli("verify", fixture_path("dihedral3.txt"))[:2] == (0, "quandle (Latin, connected)")
    assert cli("verify", fixture_path("constant_rack_3_1.txt"))[:2] == (0, "rack (not a quandle)")
    assert cli("verify", fixture_path("not_a_shelf.txt"))[:2] == (0, "not a shelf")


def test_verify_json(cli, fixture_path):
    code, out, _err = cli("--json", "verify", fixture_path("trivial3.txt"))
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "quandle"
    assert payload["order"] == 3
    assert payload["flags"]["rack"] is True


def test_qp(cli, fixture_path):
    assert cli("qp", fixture_path("dihedral3.txt"))[:2] == (0, "3st")
    code, out, _err = cli("qp", fixture_path("two_orbit4.txt"), "--spec", 2, 3, "--row", "--col")
    assert code == 0
    assert out.splitlines() == [
        "2s^2t^4 + 2s^4t^2",
        "qp(2, 3) = 936",
        "row: 2s^2 + 2s^4",
        "col: 2t^2 + 2t^4",
    ]


def test_qp_of_a_rack_reports_both_conventions(cli, fixture_path):
    code, out, _err = cli("qp", fixture_path("constant_rack_3_1.txt"))
    assert code == 0
    assert out.splitlines() == ["3", "paper-convention value: 0"]


def test_qp_json_is_canonical(cli, fixture_path):
    code, out, _err = cli("qp", fixture_path("coloring_target.txt"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["qp"] == "3st + 2s^2t^2"
    assert payload["terms"] == [{"coeff": 3, "es": 1, "et": 1}, {"coeff": 2, "es": 2, "et": 2}]
    assert dump_json(payload) == out


def test_subqp(cli, fixture_path):
    table = fixture_path("two_orbit4.txt")
    assert cli("subqp", table, "--subset", "1,2")[:2] == (0, "2s^2t^4")
    assert cli("subqp", table, "--subset", "3 4")[:2] == (0, "2s^4t^2")
    code, _out, err = cli("subqp", table, "--subset", "1,3")
    assert code == 1
    assert err.startswith("error: ")
    assert cli("subqp", table, "--subset", "1,x")[0] == 2
    assert cli("subqp", table, "--subset", "1,9")[0] == 2


def test_orbits(cli, fixture_path):
    code, out, _err = cli("orbits", fixture_path("dihedral_blocks_a.txt"))
    assert code == 0
    assert out.splitlines() == ["{1, 2, 3}: 3s^4t^4", "{4, 5, 6}: 3s^4t^4"]


def test_iso(cli, fixture_path):
    code, out, _err = cli("iso", fixture_path("dihedral_blocks_a.txt"), fixture_path("dihedral_blocks_b.txt"))
    assert (code, out) == (0, "not isomorphic")
    code, out, _err = cli("iso", fixture_path("dihedral3.txt"), fixture_path("dihedral3.txt"))
    assert (code, out) == (0, "isomorphic: 1->1, 2->2, 3->3")
    code, out, _err = cli("--json", "iso", fixture_path("trivial2.txt"), fixture_path("trivial3.txt"))
    assert json.loads(out) == {"isomorphic": False, "map": None}


def test_hom(cli, fixture_path):
    code, out, _err = cli("hom", fixture_path("trivial2.txt"), fixture_path("trivial3.txt"), "--kqp")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[0] == "1 1\t2st"
    assert lines[-1] == "# 9 homomorphisms"


def test_hom_json(cli, fixture_path):
    code, out, _err = cli("--json", "hom", fixture_path("dihedral3.txt"), fixture_path("dihedral3.txt"))
    payload = json.loads(out)
    assert payload["count"] == 9
    assert sum(1 for record in payload["homomorphisms"] if record["injective"]) == 6


def test_construct_to_stdout(cli):
    code, out, _err = cli("construct", "dihedral", 3)
    assert code == 0
    assert out.startswith("# dihedral 3\n# quandle (Latin, connected)")
    assert parse_table_text(out) == dihedral(3)


def test_construct_to_file(cli, tmp_path):
    target = tmp_path / "alexander.txt"
    assert cli("construct", "alexander", 5, 2, "--out", target)[:2] == (0, f"wrote {target}")
    assert cli("qp", target)[:2] == (0, "5st")


def test_construct_from_group_files(cli, fixture_path):
    group = fixture_path("z3_group.txt")
    code, out, _err = cli("construct", "homogeneous", group, "1,3,2")
    assert code == 0
    assert parse_table_text(out) == dihedral(3)
    code, out, _err = cli("construct", "conjugation", group)
    assert parse_table_text(out) == trivial(3)
    code, out, _err = cli("--json", "construct", "symmetric-conjugation", 3)
    assert json.loads(out)["order"] == 6


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("construct", "trivial"), 2),
        (("construct", "trivial", "x"), 2),
        (("construct", "alexander", 4, 2), 1),
        (("construct", "symplectic", 4), 1),
        (("construct", "symplectic", 5), 1),
        (("construct", "bogus", 3), 2),
        (("construct", "homogeneous", "missing-group.txt", "1,2"), 2),
    ],
)
def test_construct_errors(cli, argv, expected):
    assert cli(*argv)[0] == expected


def test_exit_codes(cli, fixture_path, tmp_path):
    assert cli("qp", fixture_path("not_a_shelf.txt"))[0] == 1
    assert cli("qp", fixture_path("bad_syntax.txt"))[0] == 2
    assert cli("qp", fixture_path("bad_entry.txt"))[0] == 2
    assert cli("qp", str(tmp_path / "missing.txt"))[0] == 2
    assert cli("color", fixture_path("dangling.pd"), fixture_path("dihedral3.txt"))[0] == 2
    assert cli("hom", fixture_path("constant_rack_3_1.txt"), fixture_path("trivial2.txt"))[0] == 1
    assert cli("bogus")[0] == 2
    assert cli()[0] == 2
    assert cli("--threads", 0, "qp", fixture_path("dihedral3.txt"))[0] == 2


def test_json_errors_go_to_stdout(cli, fixture_path):
    code, out, err = cli("qp", fixture_path("not_a_shelf.txt"), "--json")
    assert code == 1
    assert json.loads(out) == {
        "error": "qp needs a rack or quandle; got not a shelf",
        "kind": "NotAQuandleError",
    }
    assert err == ""


def test_color(cli, fixture_path):
    code, out, _err = cli("color", fixture_path("trefoil.pd"), fixture_path("dihedral3.txt"))
    assert (code, out) == (0, "9")
    code, out, _err = cli("color", fixture_path("hopf.pd"), fixture_path("trivial3.txt"), "--list")
    lines = out.splitlines()
    assert lines[0] == "9"
    assert lines[1:] == [f"{a} {b}" for a in range(1, 4) for b in range(1, 4)]


def test_threads_flag_on_either_side(cli, fixture_path):
    link, table = fixture_path("figure8.pd"), fixture_path("coloring_target.txt")
    expected = cli("color", link, table)[1]
    assert cli("--threads", 3, "color", link, table)[1] == expected
    assert cli("color", link, table, "--threads", 2)[1] == expected


def test_phi(cli, fixture_path):
    link, table = fixture_path("trefoil.pd"), fixture_path("dihedral3.txt")
    assert cli("phi", link, table)[:2] == (0, "{st: 3, 3st: 6}")
    assert cli("phi", link, table, "--spec", 1, 1)[:2] == (0, "3z + 6z^3")
    assert cli("phi", link, table, "--spec", 0, 0)[:2] == (0, "9")


def test_phi_json(cli, fixture_path):
    code, out, _err = cli("--json", "phi", fixture_path("trefoil.link"), fixture_path("dihedral3.txt"))
    assert code == 0
    assert json.loads(out) == {
        "count": 9,
        "phi": [{"multiplicity": 3, "qp": "st"}, {"multiplicity": 6, "qp": "3st"}],
    }
    assert dump_json(json.loads(out)) == out


def test_enumerate_reuses_the_catalog(cli, tmp_path, caplog):
    directory = tmp_path / "catalogs"
    code, out, _err = cli("enumerate", 3, "--out", directory)
    assert code == 0
    assert out.splitlines()[0] == "order 3: 3 quandles"
    assert (directory / "catalog-3.json").exists()
    assert read_table(str(directory / "order-3" / "quandle-003.txt")).order == 3

    with caplog.at_level(logging.INFO):
        code, out, _err = cli("--json", "enumerate", 3, "--out", directory)
    assert "Reusing stored catalog" in caplog.text
    payload = json.loads(out)
    assert payload["count"] == 3
    assert sorted(entry["qp"] for entry in payload["entries"]) == sorted(["3s^3t^3", "2s^2t^3 + s^3t", "3st"])


def test_enumerate_order_cap(cli):
    assert cli("enumerate", 8)[0] == 1


def test_conjecture(cli):
    code, out, _err = cli("conjecture", 4)
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "order 3: 3 quandles, 1 with qp = 3st, 1 Latin, 0 counterexamples"
    assert lines[-1] == "no counterexamples through order 4"


def test_collisions(cli):
    assert cli("collisions", 4)[:2] == (0, "no qp collisions at order 4")


def test_number_json():
    assert number_json(7) == 7
    assert number_json(Fraction(1, 2)) == "1/2"


def test_remember_stores_the_catalog_directory(cli, tmp_path, caplog):
    directory = tmp_path / "catalogs"
    assert cli("enumerate", 3, "--out", directory, "--remember")[0] == 0
    stored = json.loads((tmp_path / "settings.json").read_text(encoding="utf-8"))
    assert stored == {"catalog_dir": str(directory)}

    with caplog.at_level(logging.INFO):
        code, out, _err = cli("enumerate", 3)
    assert code == 0
    assert out.splitlines()[0] == "order 3: 3 quandles"
    assert "Reusing stored catalog" in caplog.text


def test_remember_needs_a_directory(cli, tmp_path):
    code, _out, err = cli("collisions", 3, "--remember")
    assert code == 2
    assert "--remember needs --out" in err
    assert not (tmp_path / "settings.json").exists()


def test_usage_errors_in_json_mode(cli, fixture_path):
    code, out, err = cli("--json", "enumerate", "three")
    assert code == 2
    assert err == ""
    payload = json.loads(out)
    assert payload["kind"] == "UsageError"
    assert "invalid int value" in payload["error"]

    code, out, _err = cli("qp", fixture_path("dihedral3.txt"), "--json", "--threads", 0)
    assert code == 2
    assert json.loads(out)["kind"] == "UsageError"
    assert json.loads(cli("--json")[1])["kind"] == "UsageError"


def test_usage_errors_in_text_mode(cli):
    code, out, err = cli("enumerate")
    assert code == 2
    assert out == ""
    assert err.startswith("usage: qptool enumerate")
    assert "qptool: error: the following arguments are required: order" in err
