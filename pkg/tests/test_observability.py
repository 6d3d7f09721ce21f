"""Tests for observability module.

These tests verify:
- Logging configuration (to stderr)
- Structured log output
- Helper functions for metrics, scans and verify properties
"""

import json
import logging
from io import StringIO

import pytest
import structlog

from mpcodes.observability import (
    configure_logging,
    get_logger,
    log_metric,
    log_property_result,
    log_scan_completed,
    log_scan_started,
)


# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture(autouse=True)
def reset_structlog():
    """Reset structlog configuration before each test."""
    structlog.reset_defaults()
    yield
    structlog.reset_defaults()


@pytest.fixture
def capture_logs():
    """Capture log output for verification."""
    log_capture = StringIO()

    structlog.configure(
        processors=[
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            structlog.processors.JSONRenderer(),
        ],
        logger_factory=structlog.PrintLoggerFactory(file=log_capture),
        wrapper_class=structlog.make_filtering_bound_logger(logging.INFO),
    )

    yield log_capture


def last_event(capture: StringIO) -> dict:
    return json.loads(capture.getvalue().strip().split("\n")[-1])


# =============================================================================
# Configuration Tests
# =============================================================================


class TestConfigureLogging:
    """Tests for logging configuration."""

    def test_json_to_stderr(self, capsys):
        """Should write JSON to stderr and leave stdout alone."""
        configure_logging(log_level="INFO", json_format=True, _silent=True)

        get_logger("test").info("test_event", key="value")

        captured = capsys.readouterr()
        assert captured.out == ""
        data = json.loads(captured.err.strip().split("\n")[-1])
        assert data["event"] == "test_event"
        assert data["key"] == "value"

    def test_console_format(self, capsys):
        """Should not emit JSON in text mode."""
        configure_logging(log_level="INFO", json_format=False, _silent=True)

        get_logger("test").info("test_event")

        err = capsys.readouterr().err
        assert "test_event" in err
        assert not err.strip().startswith("{")

    def test_log_level(self, capsys):
        """Should respect log level setting."""
        configure_logging(log_level="ERROR")

        logger = get_logger("test")
        logger.info("info_message")
        assert "info_message" not in capsys.readouterr().err

        logger.error("error_message")
        assert "error_message" in capsys.readouterr().err

    def test_announces_itself(self, capsys):
        configure_logging(log_level="INFO")
        assert "logging_configured" in capsys.readouterr().err

    def test_module_logger_follows_reconfiguration(self, capsys):
        """A logger created before configure_logging uses the new settings."""
        logger = get_logger("early")
        configure_logging(log_level="INFO", _silent=True)

        logger.info("late_event")

        assert "late_event" in capsys.readouterr().err


# =============================================================================
# Logger Tests
# =============================================================================


class TestGetLogger:
    """Tests for get_logger function."""

    def test_get_logger_with_name(self, capture_logs):
        """Should return logger with name bound."""
        get_logger("my_module").info("test_event")

        data = last_event(capture_logs)
        assert data["event"] == "test_event"
        assert data["logger_name"] == "my_module"

    def test_get_logger_without_name(self, capture_logs):
        get_logger().info("test_event")

        assert last_event(capture_logs)["event"] == "test_event"


# =============================================================================
# Metric and Event Tests
# =============================================================================


class TestLogMetric:
    """Tests for log_metric function."""

    def test_basic(self, capture_logs):
        log_metric("codewords_enumerated", 4096, "count")

        data = last_event(capture_logs)
        assert data["event"] == "metric"
        assert data["metric_name"] == "codewords_enumerated"
        assert data["value"] == 4096
        assert data["unit"] == "count"

    def test_tags(self, capture_logs):
        log_metric("codewords_enumerated", 10, "count", field_order=9)

        assert last_event(capture_logs)["field_order"] == 9


class TestScanEvents:
    """Tests for scan logging."""

    def test_started(self, capture_logs):
        log_scan_started("matrices", 4, 256, k=2)

        data = last_event(capture_logs)
        assert data["event"] == "scan_started"
        assert data["kind"] == "matrices"
        assert data["field_order"] == 4
        assert data["candidates"] == 256
        assert data["k"] == 2

    def test_completed(self, capture_logs):
        log_scan_completed("search", 3528, 12, 1.23456)

        data = last_event(capture_logs)
        assert data["event"] == "scan_completed"
        assert data["visited"] == 3528
        assert data["hits"] == 12
        assert data["duration_seconds"] == 1.235


class TestPropertyResult:
    """Tests for verify property logging."""

    def test_pass_is_info(self, capture_logs):
        log_property_result("hull_formula", True, 300, 0.5)

        data = last_event(capture_logs)
        assert data["event"] == "property_checked"
        assert data["level"] == "info"
        assert data["passed"] is True

    def test_failure_is_warning(self, capture_logs):
        log_property_result("hull_formula", False, 17, 0.5)

        data = last_event(capture_logs)
        assert data["level"] == "warning"
        assert data["trials"] == 17
