"""Persisting enumerated catalogs as an index JSON plus one table file per entry."""

from __future__ import annotations

import json
import logging
import os

from app_helpers import write_json
from constants import (
    CATALOG_ENTRY_TEMPLATE,
    CATALOG_INDEX_TEMPLATE,
    CATALOG_ORDER_DIR_TEMPLATE,
    QUANDLE_CENSUS,
)
from quandle_toolkit.core import QuandleTable
from quandle_toolkit.enumeration import Catalog
from quandle_toolkit.errors import InputError
from quandle_toolkit.table_io import write_table

_logger = logging.getLogger(__name__)


def index_path(directory: str, order: int) -> str:
    return os.path.join(directory, CATALOG_INDEX_TEMPLATE.format(order=order))


def catalog_index(catalog: Catalog) -> list[dict[str, object]]:
    return [
        {
            "connected": entry.flags.is_connected,
            "latin": entry.flags.is_latin,
            "matrix": entry.table.to_one_based(),
            "qp": str(entry.qp),
        }
        for entry in catalog.entries
    ]


def save_catalog(catalog: Catalog, directory: str) -> bool:
    """Write the index and the entry files; False (with a warning) on I/O failure."""
    order_dir = os.path.join(directory, CATALOG_ORDER_DIR_TEMPLATE.format(order=catalog.order))
    try:
        os.makedirs(order_dir, exist_ok=True)
        for index, entry in enumerate(catalog.entries, start=1):
            write_table(
                os.path.join(order_dir, CATALOG_ENTRY_TEMPLATE.format(index=index)),
                entry.table,
                comment=f"qp = {entry.qp}",
            )
    except OSError as exc:
        _logger.warning("Failed to write catalog of order %d to %s: %s", catalog.order, directory, exc)
        return False
    if not write_json(index_path(directory, catalog.order), catalog_index(catalog)):
        return False
    _logger.info("Saved %d quandles of order %d to %s", catalog.count, catalog.order, directory)
    return True


def load_catalog(directory: str, order: int) -> Catalog | None:
    """Re-validated catalog from disk, or None when absent or unusable."""
    path = index_path(directory, order)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        return None
    except (OSError, json.JSONDecodeError) as exc:
        _logger.warning("Failed to read catalog from %s: %s", path, exc)
        return None

    if not isinstance(payload, list):
        _logger.warning("Ignoring catalog %s: expected a list of entries", path)
        return None

    tables = []
    for position, item in enumerate(payload, start=1):
        if not isinstance(item, dict) or "matrix" not in item:
            _logger.warning("Ignoring catalog %s: entry %d has no matrix", path, position)
            return None
        try:
            table = QuandleTable.from_one_based(item["matrix"])
        except InputError as exc:
            _logger.warning("Ignoring catalog %s: entry %d: %s", path, position, exc)
            return None
        if table.order != order or not table.algebra_class.is_quandle:
            _logger.warning("Ignoring catalog %s: entry %d is not a quandle of order %d", path, position, order)
            return None
        tables.append(table)

    catalog = Catalog.from_tables(order, tables)
    stored = sorted(str(item.get("qp", "")) for item in payload)
    if stored != sorted(str(entry.qp) for entry in catalog.entries):
        _logger.warning("Ignoring catalog %s: stored qp values do not match the tables", path)
        return None
    expected = QUANDLE_CENSUS.get(order)
    if expected is not None and catalog.count != expected:
        _logger.warning("Catalog %s has %d entries, expected %d", path, catalog.count, expected)
        return None
    return catalog


__all__ = [
    "index_path",
    "catalog_index",
    "save_catalog",
    "load_catalog",
]
