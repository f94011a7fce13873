"""
Structured logging for the command-line tools.

Entries are rendered by structlog onto stderr; stdout carries only command
output (JSONL records, reports).
"""

import logging
import sys
from typing import Any

import structlog
from structlog.types import EventDict, Processor

from patternrank.core.config import get_settings

QUIET_LIBRARIES = ("httpx", "httpcore")


def add_app_context(
    _logger: Any, _method_name: str, event_dict: EventDict
) -> EventDict:
    """Stamp every entry with the tool name and version."""
    settings = get_settings()
    event_dict.setdefault("app", settings.APP_NAME)
    event_dict.setdefault("version", settings.APP_VERSION)
    return event_dict


def _shared_processors(debug: bool) -> list[Processor]:
    chain: list[Processor] = [
        add_app_context,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
    ]
    if debug:
        chain.append(
            structlog.processors.CallsiteParameterAdder(
                parameters=[
                    structlog.processors.CallsiteParameter.FILENAME,
                    structlog.processors.CallsiteParameter.LINENO,
                ]
            )
        )
    chain += [structlog.processors.StackInfoRenderer(), structlog.processors.format_exc_info]
    return chain


def _renderer(log_format: str) -> Processor:
    if log_format.lower() == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def setup_logging(level: str | None = None) -> None:
    """
    Configure structlog and the stdlib root logger.

    Args:
        level: Overrides ``PATTERNRANK_LOG_LEVEL`` when given (``--log-level``)
    """
    settings = get_settings()
    log_level = logging.getLevelName((level or settings.LOG_LEVEL).upper())

    # force: a second invocation in the same process must replace the handler
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level, force=True)
    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING)

    structlog.configure(
        processors=[*_shared_processors(settings.DEBUG), _renderer(settings.LOG_FORMAT)],
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        context_class=dict,
        cache_logger_on_first_use=False,
    )
