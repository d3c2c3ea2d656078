"""Argument parser for qptool."""

from __future__ import annotations

import argparse

from constants import CONSTRUCT_FAMILIES, PROG_NAME
from quandle_toolkit.errors import UsageError
from utils import positive_int


class QuandleArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of printing and exiting, so --json can report it."""

    def error(self, message: str):
        raise UsageError(message, usage=self.format_usage())


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # Subparsers repeat the global flags with suppressed defaults so they
    # work on either side of the subcommand.
    common = QuandleArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="print canonical JSON instead of text",
    )
    common.add_argument(
        "--threads",
        type=positive_int,
        default=argparse.SUPPRESS if suppress else None,
        metavar="N",
        help="worker count for the search kernels",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = QuandleArgumentParser(
        prog=PROG_NAME,
        description="Finite quandles, quandle polynomials and link colorings.",
        parents=[_common_options(suppress=False)],
    )
    common = _common_options(suppress=True)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=help_text, parents=[common])

    verify = add("verify", "classify a table as shelf, rack or quandle")
    verify.add_argument("table", help="1-based table file")

    qp = add("qp", "quandle polynomial of a rack or quandle")
    qp.add_argument("table")
    qp.add_argument("--spec", nargs=2, type=int, metavar=("S", "T"), help="evaluate at integers s, t")
    qp.add_argument("--row", action="store_true", help="also print qp(s, 1)")
    qp.add_argument("--col", action="store_true", help="also print qp(1, t)")

    subqp = add("subqp", "subquandle polynomial of a closed subset")
    subqp.add_argument("table")
    subqp.add_argument("--subset", required=True, help="1-based elements, e.g. 1,2,3")

    orbits = add("orbits", "orbit decomposition with each orbit's subquandle polynomial")
    orbits.add_argument("table")

    iso = add("iso", "decide isomorphism and print a witness")
    iso.add_argument("first")
    iso.add_argument("second")

    enumerate_cmd = add("enumerate", "all quandles of order n up to isomorphism")
    enumerate_cmd.add_argument("order", type=int)
    enumerate_cmd.add_argument("--out", metavar="DIR", help="catalog directory to reuse and update")
    enumerate_cmd.add_argument("--remember", action="store_true", help="store DIR as the default catalog directory")
    enumerate_cmd.add_argument("--refresh", action="store_true", help="ignore a stored catalog")

    conjecture = add("conjecture", "look for non-Latin quandles with qp = n st")
    conjecture.add_argument("n_max", type=int)
    conjecture.add_argument("--out", metavar="DIR", help="catalog directory to reuse and update")
    conjecture.add_argument("--remember", action="store_true", help="store DIR as the default catalog directory")

    collisions = add("collisions", "non-isomorphic quandles of order n sharing a qp")
    collisions.add_argument("order", type=int)
    collisions.add_argument("--out", metavar="DIR", help="catalog directory to reuse and update")
    collisions.add_argument("--remember", action="store_true", help="store DIR as the default catalog directory")

    hom = add("hom", "all homomorphisms between two quandles")
    hom.add_argument("source")
    hom.add_argument("target")
    hom.add_argument("--kqp", action="store_true", help="print K_qp next to each map")

    construct = add("construct", "write out a standard quandle or rack")
    construct.add_argument("family", choices=CONSTRUCT_FAMILIES)
    construct.add_argument("params", nargs="*")
    construct.add_argument("--out", metavar="FILE", help="write the table here instead of stdout")

    color = add("color", "count colorings of a link diagram by a quandle")
    color.add_argument("link", help="PD code or native crossing list")
    color.add_argument("table")
    color.add_argument("--list", action="store_true", help="print every coloring")

    phi = add("phi", "the Φ_qp multiset of a link diagram")
    phi.add_argument("link")
    phi.add_argument("table")
    phi.add_argument("--spec", nargs=2, type=int, metavar=("S0", "T0"), help="specialise to a z-polynomial")

    return parser


__all__ = ["build_parser"]
