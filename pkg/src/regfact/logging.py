"""Logging configuration for regfact.

Events are key/value pairs. Group elements, edges, groups and condition ids may be
passed as values directly; they are rendered in their text forms.
"""

import logging
import sys
from enum import Enum
from typing import Any, Optional

import structlog
from structlog.typing import EventDict

from regfact.config import get_settings
from regfact.graph.edges import Edge, format_edge
from regfact.groups.family import GroupElement, GroupFamily, format_element


def render_domain_values(_logger: Any, _method: str, event_dict: EventDict) -> EventDict:
    """Replace domain objects in an event by their text forms."""
    for key, value in event_dict.items():
        if isinstance(value, GroupElement):
            event_dict[key] = format_element(value)
        elif isinstance(value, Edge):
            event_dict[key] = format_edge(value)
        elif isinstance(value, GroupFamily):
            event_dict[key] = value.label
        elif isinstance(value, Enum):
            event_dict[key] = value.value
    return event_dict


def setup_logging(level: Optional[str] = None) -> None:
    """Configure structlog on top of stdlib logging.

    Args:
        level: Overrides the configured level for this process (``--verbose`` passes DEBUG)
    """
    settings = get_settings()
    name = (level or settings.log.level).upper()
    numeric = getattr(logging, name, logging.WARNING)

    processors: list[Any] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        render_domain_values,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
    ]
    if settings.log.format == "json":
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=numeric, force=True)


def bind_instance(family: str, param: int) -> None:
    """Tag every later event of this run with the requested instance."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(family=family.strip().lower(), param=param)


def get_logger(name: str) -> Any:
    """Get a logger instance.

    Args:
        name: Logger name

    Returns:
        Structured logger
    """
    return structlog.get_logger(name)
