import argparse
import re
from typing import Iterable, Sequence

from quandle_toolkit.errors import MalformedInputError


def parse_int(token: str, name: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise MalformedInputError(f"{name} must be an integer, got {token!r}") from exc


def parse_index_list(text: str, name: str = "list") -> list[int]:
    """Parse '1,2,3' (commas and/or spaces) into 0-based indices."""
    tokens = [token for token in re.split(r"[\s,]+", text.strip()) if token]
    if not tokens:
        raise MalformedInputError(f"{name} is empty")
    values = []
    for token in tokens:
        value = parse_int(token, name)
        if value < 1:
            raise MalformedInputError(f"{name} entries are 1-based, got {value}")
        values.append(value - 1)
    return values


def positive_int(text: str) -> int:
    """argparse type for counts such as --threads."""
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def format_elements(elements: Iterable[int]) -> str:
    return "{" + ", ".join(str(element + 1) for element in sorted(elements)) + "}"


def format_sequence(values: Sequence[int]) -> str:
    return " ".join(str(value + 1) for value in values)


def format_matrix(rows: Sequence[Sequence[int]], indent: str = "") -> str:
    """Render 1-based rows right-aligned, one per line."""
    width = max((len(str(value)) for row in rows for value in row), default=1)
    return "\n".join(indent + " ".join(str(value).rjust(width) for value in row) for row in rows)
