"""Application helper utilities for the qptool command line."""

import json
import logging
import os

from constants import SETTINGS_ENV_VAR, SETTINGS_FILE

SEARCH_LOGGERS = (
    "quandle_toolkit.enumeration",
    "quandle_toolkit.homomorphism",
    "quandle_toolkit.links",
)


def configure_search_logging(log_format: str) -> None:
    if not os.getenv("QP_DEBUG_SEARCH"):
        return
    search_handler = logging.StreamHandler()
    search_handler.setLevel(logging.DEBUG)
    search_handler.setFormatter(logging.Formatter(log_format))
    search_handler._search_debug = True
    for logger_name in SEARCH_LOGGERS:
        logger = logging.getLogger(logger_name)
        logger.setLevel(logging.DEBUG)
        logger.propagate = False
        if not any(getattr(handler, "_search_debug", False) for handler in logger.handlers):
            logger.addHandler(search_handler)
    logging.getLogger("quandle_toolkit.enumeration").debug("QP_DEBUG_SEARCH enabled.")


def get_settings_path(_app=None) -> str:
    override = os.getenv(SETTINGS_ENV_VAR, "").strip()
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), SETTINGS_FILE)


def get_catalog_dir(app, override: str | None = None) -> str:
    if override:
        return override
    return app.settings.catalog_dir


def dump_json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True)


def write_json(path: str, payload: object) -> bool:
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
        logging.getLogger(__name__).warning(
            "Failed to write %s: %s",
            path,
            exc,
        )
        return False
    return True
