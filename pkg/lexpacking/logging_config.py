"""Route stdlib logging through structlog renderers."""

from __future__ import annotations

import logging
import sys

import structlog

from lexpacking.config import Settings


def configure_logging(settings: Settings) -> None:
    """Install a stderr handler rendering records as console text or JSON lines.

    Library modules keep using ``logging.getLogger(__name__)``; only the
    formatting is delegated to structlog. Stdout is left for reports.
    """
    renderer: structlog.types.Processor
    if settings.log_format == "json":
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    shared: list[structlog.types.Processor] = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=shared,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)

    level = logging.getLevelName(settings.log_level)
    root.setLevel(level if isinstance(level, int) else logging.WARNING)
