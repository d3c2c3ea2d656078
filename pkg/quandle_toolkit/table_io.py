"""Reading and writing the 1-based quandle file format.

A file holds the order n on its first line, then n lines of n
whitespace-separated integers in 1..n. Lines starting with '#' and blank
lines are ignored. Group Cayley tables use the same format.
"""

from __future__ import annotations

import logging

from constants import COMMENT_PREFIX
from quandle_toolkit.core import QuandleTable
from quandle_toolkit.errors import InputError, ParseError

_logger = logging.getLogger(__name__)


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        lines.append(line)
    return lines


def parse_table_text(text: str) -> QuandleTable:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty table file")
    try:
        order = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from exc
    if order < 1:
        raise ParseError(f"order must be positive, got {order}")
    body = lines[1:]
    if len(body) != order:
        raise ParseError(f"expected {order} table rows, found {len(body)}")
    rows = []
    for number, line in enumerate(body, start=1):
        try:
            row = [int(token) for token in line.split()]
        except ValueError as exc:
            raise ParseError(f"row {number}: non-integer entry in {line!r}") from exc
        if len(row) != order:
            raise ParseError(f"row {number}: expected {order} entries, found {len(row)}")
        rows.append(row)
    return QuandleTable.from_one_based(rows)


def format_table(table: QuandleTable, comment: str | None = None) -> str:
    width = len(str(table.order))
    lines = []
    if comment:
        lines.extend(f"{COMMENT_PREFIX} {part}" for part in comment.splitlines())
    lines.append(str(table.order))
    for row in table.to_one_based():
        lines.append(" ".join(str(value).rjust(width) for value in row))
    return "\n".join(lines) + "\n"


def read_table(path: str) -> QuandleTable:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_table_text(text)
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def write_table(path: str, table: QuandleTable, comment: str | None = None) -> None:
    _logger.debug("Writing order-%d table to %s", table.order, path)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_table(table, comment))


__all__ = [
    "parse_table_text",
    "format_table",
    "read_table",
    "write_table",
]
