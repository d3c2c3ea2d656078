#!/usr/bin/env python3
import logging
import os
import sys

import app_helpers
from cli import algebra_commands, catalog_commands, link_commands, output
from cli.parser import build_parser
from constants import EXIT_DOMAIN_ERROR, EXIT_INPUT_ERROR, EXIT_OK, MAX_WORKERS
from quandle_toolkit import settings_manager
from quandle_toolkit.errors import DomainError, InputError, UsageError

if os.getenv("QP_DEBUG"):
    log_level = logging.DEBUG
elif os.getenv("QP_VERBOSE"):
    log_level = logging.INFO
else:
    log_level = logging.WARNING
log_format = "%(levelname)s %(name)s: %(message)s"
logging.basicConfig(
    level=log_level,
    format=log_format,
)
app_helpers.configure_search_logging(log_format)


class QuandleApp:
    def __init__(self, settings_path: str | None = None) -> None:
        self.settings_path = settings_path or self.get_settings_path()
        self.settings = settings_manager.load_settings(self.settings_path)
        self.json_output = False
        self.workers = self.settings.workers
        self.parser = build_parser()

    def run(self, argv: list[str]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except UsageError as exc:
            self.json_output = "--json" in argv
            self.emit_usage_error(exc)
            return EXIT_INPUT_ERROR
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR
        self.json_output = args.json
        if args.threads is not None:
            self.workers = min(args.threads, MAX_WORKERS)
        handler = getattr(self, f"cmd_{args.command}")
        logger = logging.getLogger(__name__)
        try:
            handler(args)
        except InputError as exc:
            logger.debug("%s failed: %r", args.command, exc)
            self.emit_error(exc)
            return EXIT_INPUT_ERROR
        except DomainError as exc:
            logger.debug("%s failed: %r", args.command, exc)
            self.emit_error(exc)
            return EXIT_DOMAIN_ERROR
        return EXIT_OK


def _bind_methods(source, names) -> None:
    for name in names:
        setattr(QuandleApp, name, getattr(source, name))


for binder, source, names in (
    (_bind_methods, app_helpers, ("get_settings_path", "get_catalog_dir")),
    (_bind_methods, settings_manager, ("persist_catalog_dir",)),
    (_bind_methods, output, ("emit", "emit_error", "emit_usage_error")),
    (_bind_methods, algebra_commands, ("cmd_verify", "cmd_qp", "cmd_subqp", "cmd_orbits", "cmd_iso", "cmd_hom", "cmd_construct", "build_construct")),
    (_bind_methods, catalog_commands, ("cmd_enumerate", "cmd_conjecture", "cmd_collisions", "load_or_enumerate")),
    (_bind_methods, link_commands, ("cmd_color", "cmd_phi")),
):
    binder(source, names)


def main(argv: list[str] | None = None) -> int:
    app = QuandleApp()
    return app.run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
