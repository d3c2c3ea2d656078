"""Handlers for the catalog subcommands: enumerate, conjecture, collisions."""

from __future__ import annotations

import logging

from quandle_toolkit.catalog_store import catalog_index, load_catalog, save_catalog
from quandle_toolkit.enumeration import Catalog, check_latin_conjecture, enumerate_quandles, qp_collisions
from quandle_toolkit.errors import UsageError
from utils import format_matrix


def load_or_enumerate(app, order: int, out: str | None = None, refresh: bool = False) -> Catalog:
    logger = logging.getLogger(__name__)
    directory = app.get_catalog_dir(out)
    if directory and not refresh:
        stored = load_catalog(directory, order)
        if stored is not None:
            logger.info("Reusing stored catalog of order %d from %s", order, directory)
            return stored
    catalog = enumerate_quandles(
        order,
        max_order=app.settings.enumerate_max_order,
        canonical_max_order=app.settings.canonical_form_max_order,
        workers=app.workers,
    )
    if directory:
        save_catalog(catalog, directory)
    return catalog


def _remember_catalog_dir(app, args) -> None:
    if not args.remember:
        return
    if not args.out:
        raise UsageError("--remember needs --out DIR")
    app.persist_catalog_dir(args.out)


def _flag_labels(entry) -> str:
    labels = [label for flag, label in ((entry.flags.is_latin, "Latin"), (entry.flags.is_connected, "connected")) if flag]
    return f" [{', '.join(labels)}]" if labels else ""


def cmd_enumerate(app, args) -> None:
    _remember_catalog_dir(app, args)
    catalog = app.load_or_enumerate(args.order, args.out, args.refresh)
    lines = [f"order {catalog.order}: {catalog.count} quandles"]
    for number, entry in enumerate(catalog.entries, start=1):
        lines.append(f"{number}. {entry.qp}{_flag_labels(entry)}")
        lines.append(format_matrix(entry.table.to_one_based(), indent="   "))
    app.emit(
        "\n".join(lines),
        {"count": catalog.count, "entries": catalog_index(catalog), "order": catalog.order},
    )


def cmd_conjecture(app, args) -> None:
    _remember_catalog_dir(app, args)
    report = check_latin_conjecture(
        args.n_max,
        catalog_for=lambda order: app.load_or_enumerate(order, args.out),
        max_order=app.settings.enumerate_max_order,
    )
    lines = []
    orders = []
    for findings in report.orders:
        lines.append(
            f"order {findings.order}: {findings.quandle_count} quandles, "
            f"{findings.nst_count} with qp = {findings.order}st, "
            f"{findings.latin_count} Latin, "
            f"{len(findings.counterexamples)} counterexamples"
        )
        for table in findings.counterexamples:
            lines.append(format_matrix(table.to_one_based(), indent="   "))
        orders.append(
            {
                "converse_violations": [table.to_one_based() for table in findings.converse_violations],
                "counterexamples": [table.to_one_based() for table in findings.counterexamples],
                "latin_count": findings.latin_count,
                "nst_count": findings.nst_count,
                "order": findings.order,
                "quandle_count": findings.quandle_count,
            }
        )
    if report.holds:
        lines.append(f"no counterexamples through order {report.n_max}")
    else:
        lines.append("counterexamples found")
    app.emit("\n".join(lines), {"holds": report.holds, "n_max": report.n_max, "orders": orders})


def cmd_collisions(app, args) -> None:
    _remember_catalog_dir(app, args)
    catalog = app.load_or_enumerate(args.order, args.out)
    groups = qp_collisions(catalog)
    lines = []
    for group in groups:
        lines.append(f"{group[0].qp}: {len(group)} non-isomorphic quandles")
        for entry in group:
            lines.append(format_matrix(entry.table.to_one_based(), indent="   "))
            lines.append("")
    if not groups:
        lines.append(f"no qp collisions at order {catalog.order}")
    app.emit(
        "\n".join(lines).rstrip("\n"),
        {
            "collisions": [
                {"matrices": [entry.table.to_one_based() for entry in group], "qp": str(group[0].qp)}
                for group in groups
            ],
            "order": catalog.order,
        },
    )


__all__ = [
    "load_or_enumerate",
    "cmd_enumerate",
    "cmd_conjecture",
    "cmd_collisions",
]
