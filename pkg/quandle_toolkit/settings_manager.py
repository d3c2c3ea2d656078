"""Settings loading and saving."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, replace

from constants import (
    CANONICAL_ORDER_LIMIT,
    DEFAULT_CANONICAL_MAX_ORDER,
    DEFAULT_CATALOG_DIR,
    DEFAULT_ENUMERATE_MAX_ORDER,
    DEFAULT_RANDOM_SEED,
    DEFAULT_SYMPLECTIC_MAX_ORDER,
    DEFAULT_WORKERS,
    ENUMERATE_ORDER_LIMIT,
    MAX_WORKERS,
)


@dataclass(frozen=True)
class Settings:
    canonical_form_max_order: int = DEFAULT_CANONICAL_MAX_ORDER
    enumerate_max_order: int = DEFAULT_ENUMERATE_MAX_ORDER
    symplectic_max_order: int = DEFAULT_SYMPLECTIC_MAX_ORDER
    catalog_dir: str = DEFAULT_CATALOG_DIR
    workers: int = DEFAULT_WORKERS
    random_seed: int = DEFAULT_RANDOM_SEED

    def to_dict(self) -> dict[str, object]:
        return asdict(self)


def _read_int(payload: dict, key: str, default: int, low: int, high: int | None = None) -> int:
    value = payload.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        logging.getLogger(__name__).warning("Ignoring non-integer setting %s=%r", key, value)
        return default
    if value < low:
        return low
    if high is not None and value > high:
        return high
    return value


def parse_settings(payload: object) -> Settings:
    if not isinstance(payload, dict):
        return Settings()

    catalog_dir = payload.get("catalog_dir", DEFAULT_CATALOG_DIR)
    if isinstance(catalog_dir, str):
        catalog_dir = catalog_dir.strip()
    else:
        catalog_dir = DEFAULT_CATALOG_DIR

    random_seed = payload.get("random_seed", DEFAULT_RANDOM_SEED)
    if isinstance(random_seed, bool) or not isinstance(random_seed, int) or random_seed < 0:
        random_seed = DEFAULT_RANDOM_SEED

    return Settings(
        canonical_form_max_order=_read_int(
            payload, "canonical_form_max_order", DEFAULT_CANONICAL_MAX_ORDER, 1, CANONICAL_ORDER_LIMIT
        ),
        enumerate_max_order=_read_int(
            payload, "enumerate_max_order", DEFAULT_ENUMERATE_MAX_ORDER, 1, ENUMERATE_ORDER_LIMIT
        ),
        symplectic_max_order=_read_int(payload, "symplectic_max_order", DEFAULT_SYMPLECTIC_MAX_ORDER, 1),
        catalog_dir=catalog_dir,
        workers=_read_int(payload, "workers", DEFAULT_WORKERS, 1, MAX_WORKERS),
        random_seed=random_seed,
    )


def load_settings(path: str) -> Settings:
    logger = logging.getLogger(__name__)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        return Settings()
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("Failed to read settings from %s: %s", path, exc)
        return Settings()
    return parse_settings(payload)


def save_settings(path: str, updates: dict[str, object]) -> None:
    logger = logging.getLogger(__name__)
    payload: dict[str, object] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            existing = json.load(handle)
        if isinstance(existing, dict):
            payload.update(existing)
    except FileNotFoundError:
        payload = {}
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("Failed to read settings from %s: %s", path, exc)
        payload = {}

    payload.update(updates)

    try:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(
                payload,
                handle,
                indent=2,
                sort_keys=True,
                ensure_ascii=True,
            )
            handle.write("\n")
    except OSError as exc:
        logger.warning("Failed to write settings to %s: %s", path, exc)


def persist_catalog_dir(app, directory: str) -> None:
    save_settings(app.settings_path, {"catalog_dir": directory})
    app.settings = replace(app.settings, catalog_dir=directory)
    logging.getLogger(__name__).info("Default catalog directory is now %s", directory)


__all__ = [
    "Settings",
    "parse_settings",
    "load_settings",
    "save_settings",
    "persist_catalog_dir",
]
