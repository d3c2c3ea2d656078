"""Handlers for the single-table and two-table subcommands."""

from __future__ import annotations

import logging

from cli.output import number_json
from quandle_toolkit import constructors
from quandle_toolkit.core import classify, is_isomorphic, orbits, require_rack
from quandle_toolkit.errors import MalformedInputError
from quandle_toolkit.homomorphism import all_homs, classify_hom, kqp
from quandle_toolkit.polynomial import col_poly, paper_convention_qp, qp, row_poly, sub_qp
from quandle_toolkit.table_io import format_table, read_table, write_table
from utils import format_elements, format_sequence, parse_index_list, parse_int


def cmd_verify(app, args) -> None:
    table = read_table(args.table)
    flags = classify(table)
    app.emit(
        flags.describe(),
        {"class": flags.describe(), "flags": flags.to_dict(), "order": table.order},
    )


def cmd_qp(app, args) -> None:
    table = require_rack(read_table(args.table), "qp")
    poly = qp(table)
    lines = [str(poly)]
    payload: dict[str, object] = {"order": table.order, "qp": str(poly), "terms": poly.to_json()}
    if args.spec:
        s0, t0 = args.spec
        value = poly.evaluate(s0, t0)
        lines.append(f"qp({s0}, {t0}) = {value}")
        payload["value"] = number_json(value)
    if args.row:
        lines.append(f"row: {row_poly(table)}")
        payload["row"] = str(row_poly(table))
    if args.col:
        lines.append(f"col: {col_poly(table)}")
        payload["col"] = str(col_poly(table))
    if not paper_convention_qp(table):
        lines.append("paper-convention value: 0")
        payload["paper_convention"] = "0"
    app.emit("\n".join(lines), payload)


def cmd_subqp(app, args) -> None:
    table = read_table(args.table)
    subset = parse_index_list(args.subset, "subset")
    poly = sub_qp(table, subset)
    app.emit(
        str(poly),
        {"qp": str(poly), "subset": sorted(element + 1 for element in set(subset)), "terms": poly.to_json()},
    )


def cmd_orbits(app, args) -> None:
    table = require_rack(read_table(args.table), "orbits")
    blocks = orbits(table)
    rows = [(block, sub_qp(table, block)) for block in blocks]
    app.emit(
        "\n".join(f"{format_elements(block)}: {poly}" for block, poly in rows),
        {"orbits": [{"elements": sorted(e + 1 for e in block), "qp": str(poly)} for block, poly in rows]},
    )


def cmd_iso(app, args) -> None:
    first = read_table(args.first)
    second = read_table(args.second)
    witness = is_isomorphic(first, second)
    if witness is None:
        app.emit("not isomorphic", {"isomorphic": False, "map": None})
        return
    app.emit(
        "isomorphic: " + ", ".join(f"{x + 1}->{y + 1}" for x, y in enumerate(witness)),
        {"isomorphic": True, "map": [y + 1 for y in witness]},
    )


def cmd_hom(app, args) -> None:
    homs = all_homs(read_table(args.source), read_table(args.target), workers=app.workers)
    lines = []
    records = []
    for f in homs:
        kind = classify_hom(f)
        record: dict[str, object] = {
            "injective": kind.injective,
            "map": f.to_one_based(),
            "surjective": kind.surjective,
        }
        line = format_sequence(f.mapping)
        if args.kqp:
            record["kqp"] = str(kqp(f))
            line = f"{line}\t{record['kqp']}"
        lines.append(line)
        records.append(record)
    lines.append(f"# {len(homs)} homomorphisms")
    app.emit("\n".join(lines), {"count": len(homs), "homomorphisms": records})


def _ints(params: list[str], names: tuple[str, ...], optional: tuple[str, ...] = ()) -> list[int]:
    if not len(names) <= len(params) <= len(names) + len(optional):
        expected = " ".join(names + tuple(f"[{name}]" for name in optional))
        raise MalformedInputError(f"expected parameters: {expected}")
    return [parse_int(token, name) for token, name in zip(params, names + optional)]


def _group_and_rest(params: list[str], rest: str, required: bool) -> tuple[object, list[str]]:
    if len(params) < 1 or len(params) > 2 or (required and len(params) != 2):
        suffix = f" <{rest}>" if required else f" [{rest}]"
        raise MalformedInputError(f"expected parameters: <groupfile>{suffix}")
    return read_table(params[0]), params[1:]


def build_construct(app, family: str, params: list[str]):
    if family == "trivial":
        (n,) = _ints(params, ("n",))
        return constructors.trivial(n)
    if family == "alexander":
        n, a = _ints(params, ("n", "a"))
        return constructors.alexander_cyclic(n, a)
    if family == "dihedral":
        (n,) = _ints(params, ("n",))
        return constructors.dihedral(n)
    if family == "constant-rack":
        n, k = _ints(params, ("n", "k"))
        return constructors.constant_rack(n, k)
    if family == "symplectic":
        values = _ints(params, ("p",), ("dimension",))
        return constructors.symplectic(*values, max_order=app.settings.symplectic_max_order)
    if family == "symmetric-conjugation":
        values = _ints(params, ("k",), ("nfold",))
        return constructors.conjugation(constructors.symmetric_group(values[0]), *values[1:])
    if family == "conjugation":
        group, rest = _group_and_rest(params, "nfold", required=False)
        nfold = parse_int(rest[0], "nfold") if rest else 1
        return constructors.conjugation(group, nfold)
    group, rest = _group_and_rest(params, "images", required=True)
    return constructors.homogeneous(group, parse_index_list(rest[0], "images"))


def cmd_construct(app, args) -> None:
    table = app.build_construct(args.family, list(args.params))
    flags = classify(table)
    comment = " ".join([args.family, *args.params]) + f"\n{flags.describe()}"
    if args.out:
        logging.getLogger(__name__).info("Writing %s to %s", args.family, args.out)
        try:
            write_table(args.out, table, comment)
        except OSError as exc:
            raise MalformedInputError(f"cannot write {args.out}: {exc}") from exc
    app.emit(
        f"wrote {args.out}" if args.out else format_table(table, comment).rstrip("\n"),
        {
            "class": flags.describe(),
            "family": args.family,
            "matrix": table.to_one_based(),
            "order": table.order,
            "params": list(args.params),
        },
    )


__all__ = [
    "cmd_verify",
    "cmd_qp",
    "cmd_subqp",
    "cmd_orbits",
    "cmd_iso",
    "cmd_hom",
    "build_construct",
    "cmd_construct",
]
