"""Text and JSON rendering shared by the command handlers."""

from __future__ import annotations

import sys
from fractions import Fraction

from app_helpers import dump_json
from constants import PROG_NAME
from quandle_toolkit.errors import UsageError


def emit(app, text: str, payload: object) -> None:
    if app.json_output:
        print(dump_json(payload))
    else:
        print(text)


def emit_error(app, exc: Exception) -> None:
    if app.json_output:
        print(dump_json({"error": str(exc), "kind": type(exc).__name__}))
    else:
        print(f"error: {exc}", file=sys.stderr)


def emit_usage_error(app, exc: UsageError) -> None:
    if app.json_output:
        emit_error(app, exc)
        return
    # Same shape as argparse's own report.
    sys.stderr.write(exc.usage)
    print(f"{PROG_NAME}: error: {exc}", file=sys.stderr)


def number_json(value: int | Fraction) -> int | str:
    # JSON output never carries floats.
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


__all__ = ["emit", "emit_error", "emit_usage_error", "number_json"]
