"""Structured logging for the workbench.

Logs go to stderr so that stdout stays reserved for command results.
The default level is WARNING; raise it with ``MPCODES_LOG_LEVEL=INFO`` to
see scan progress.

Example log output:
    {
        "timestamp": "2026-01-15T10:30:00Z",
        "level": "info",
        "event": "search_completed",
        "matrices_scanned": 72,
        "hits": 12,
        "duration_seconds": 1.42
    }

Filter a run:
    mpcodes search --field 4 --n 2 --k 2 2>&1 >/dev/null | jq 'select(.event == "search_completed")'
"""

import logging
import sys
from typing import Any

import structlog

# Track if logging has been configured
_logging_configured = False


def configure_logging(
    log_level: str = "WARNING",
    json_format: bool = True,
    _silent: bool = False,
) -> None:
    """Configure structured logging with structlog.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        json_format: If True, output JSON; if False, output plain text
        _silent: If True, don't log the "logging_configured" message (internal use)
    """
    global _logging_configured
    level = getattr(logging, log_level.upper())
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level)

    processors: list[Any] = [
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.add_log_level,
        structlog.processors.format_exc_info,
    ]
    if json_format:
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        # the CLI reconfigures after module loggers exist, so bind on every call
        cache_logger_on_first_use=False,
    )

    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")
        )
    root_logger = logging.getLogger()
    root_logger.handlers = [handler]
    _logging_configured = True

    if not _silent:
        structlog.get_logger().info(
            "logging_configured",
            log_level=log_level,
            json_format=json_format,
        )


def get_logger(name: str | None = None) -> Any:
    """Get a structured logger instance.

    Args:
        name: Logger name (usually __name__)

    Returns:
        structlog logger bound with optional name

    Example:
        logger = get_logger(__name__)
        logger.debug("hull_formula_evaluated", hull_dim=2, tau="(1 2)")
    """
    if name:
        return structlog.get_logger(name, logger_name=name)
    return structlog.get_logger()


def log_metric(
    metric_name: str,
    value: float,
    unit: str = "count",
    **tags: Any,
) -> None:
    """Log a metric for observability.

    Args:
        metric_name: Name of the metric
        value: Metric value
        unit: Unit of measurement (count, seconds, ...)
        **tags: Additional tags for the metric

    Example:
        log_metric("codewords_enumerated", 4096, "count", field_order=4)
    """
    get_logger("metrics").info(
        "metric",
        metric_name=metric_name,
        value=value,
        unit=unit,
        **tags,
    )


def log_scan_started(
    kind: str,
    field_order: int,
    candidates: int,
    **extra: Any,
) -> None:
    """Log the start of an exhaustive or sampled scan.

    Args:
        kind: Scan kind (matrices, search, oracle)
        field_order: Order of the field being scanned
        candidates: Number of candidates the scan may visit
        **extra: Additional context
    """
    get_logger("scan").info(
        "scan_started",
        kind=kind,
        field_order=field_order,
        candidates=candidates,
        **extra,
    )


def log_scan_completed(
    kind: str,
    visited: int,
    hits: int,
    duration_seconds: float,
    **extra: Any,
) -> None:
    """Log scan completion.

    Args:
        kind: Scan kind (matrices, search, oracle)
        visited: Candidates actually visited
        hits: Candidates that matched
        duration_seconds: Total execution time
        **extra: Additional context
    """
    get_logger("scan").info(
        "scan_completed",
        kind=kind,
        visited=visited,
        hits=hits,
        duration_seconds=round(duration_seconds, 3),
        **extra,
    )


def log_property_result(
    name: str,
    passed: bool,
    trials: int,
    duration_seconds: float,
    **extra: Any,
) -> None:
    """Log one verify-suite property outcome.

    Failures are logged at warning level.
    """
    logger = get_logger("verify")
    log = logger.info if passed else logger.warning
    log(
        "property_checked",
        property=name,
        passed=passed,
        trials=trials,
        duration_seconds=round(duration_seconds, 3),
        **extra,
    )


# Logs emitted before an explicit configure_logging call are still JSON
if not _logging_configured:
    configure_logging(log_level="WARNING", json_format=True, _silent=True)
