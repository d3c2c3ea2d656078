"""Handlers for the link-diagram subcommands."""

from __future__ import annotations

from quandle_toolkit.links import colorings, phi_qp, read_link
from quandle_toolkit.table_io import read_table
from utils import format_sequence


def cmd_color(app, args) -> None:
    diagram = read_link(args.link)
    found = colorings(diagram, read_table(args.table), workers=app.workers)
    lines = [str(len(found))]
    payload: dict[str, object] = {"arcs": diagram.arc_count, "count": len(found)}
    if args.list:
        lines.extend(format_sequence(coloring) for coloring in found)
        payload["colorings"] = [[color + 1 for color in coloring] for coloring in found]
    app.emit("\n".join(lines), payload)


def cmd_phi(app, args) -> None:
    diagram = read_link(args.link)
    multiset = phi_qp(diagram, read_table(args.table), workers=app.workers)
    payload: dict[str, object] = {"count": multiset.total(), "phi": multiset.to_json()}
    if args.spec:
        s0, t0 = args.spec
        specialized = multiset.specialize(s0, t0)
        payload["specialized"] = str(specialized)
        payload["terms"] = specialized.to_json()
        app.emit(str(specialized), payload)
        return
    app.emit(str(multiset), payload)


__all__ = ["cmd_color", "cmd_phi"]
