import io
import logging
import sys

from amdesigns.logging.config import StderrHandler, get_logger, initialize_logging, logging_config
from amdesigns.logging.console import configure_logger, log_error, log_info, log_warning


def test_console_helpers_use_cli_logger(caplog):
    configure_logger("DEBUG")
    with caplog.at_level(logging.INFO, logger="amdesigns"):
        log_info("info message")
        log_warning("warning message")
        log_error("error message")
    records = [(record.name, record.levelname, record.getMessage()) for record in caplog.records]
    assert ("amdesigns.cli", "INFO", "info message") in records
    assert ("amdesigns.cli", "WARNING", "warning message") in records
    assert ("amdesigns.cli", "ERROR", "error message") in records


def test_configure_logger_sets_package_level():
    configure_logger("ERROR")
    assert logging.getLogger("amdesigns").level == logging.ERROR
    configure_logger(logging.INFO)
    assert logging.getLogger("amdesigns").level == logging.INFO


def test_initialize_logging_writes_file(tmp_path):
    log_file = tmp_path / "logs" / "amdesigns.log"
    initialize_logging(log_level="INFO", log_file=str(log_file))
    get_logger("amdesigns.test").info("written to file")
    for handler in logging.getLogger("amdesigns").handlers:
        handler.flush()
    assert "written to file" in log_file.read_text(encoding="utf-8")
    initialize_logging(log_level="INFO")


def test_logging_config_targets_package_logger():
    config = logging_config("debug")
    assert list(config["loggers"]) == ["amdesigns"]
    assert config["loggers"]["amdesigns"]["level"] == "DEBUG"
    assert config["loggers"]["amdesigns"]["handlers"] == ["stderr"]
    assert "root" not in config


def test_logging_config_adds_rotating_file(tmp_path):
    config = logging_config("INFO", str(tmp_path / "nested" / "run.log"))
    handler = config["handlers"]["file"]
    assert handler["class"] == "logging.handlers.RotatingFileHandler"
    assert (handler["maxBytes"], handler["backupCount"]) == (5 * 1024 * 1024, 5)
    assert config["formatters"]["report"]["format"] == (
        "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
    )
    assert not (tmp_path / "nested").exists()


def test_initialize_logging_creates_log_directory(tmp_path):
    log_file = tmp_path / "nested" / "run.log"
    initialize_logging(log_file=str(log_file))
    assert log_file.parent.is_dir()
    initialize_logging()


def test_get_logger_stays_inside_package():
    assert get_logger("codes").name == "amdesigns.codes"
    assert get_logger("amdesigns.harmonic").name == "amdesigns.harmonic"
    assert get_logger("amdesigns").name == "amdesigns"


def test_repeated_configuration_keeps_one_stderr_handler():
    configure_logger("INFO")
    configure_logger("WARNING")
    handlers = logging.getLogger("amdesigns").handlers
    assert len(handlers) == 1
    assert isinstance(handlers[0], StderrHandler)


def test_stderr_handler_follows_current_stream(monkeypatch):
    buffer = io.StringIO()
    monkeypatch.setattr(sys, "stderr", buffer)
    configure_logger("INFO")
    log_warning("routed to the replaced stream")
    assert "routed to the replaced stream" in buffer.getvalue()
    assert " | WARNING | amdesigns.cli | " in buffer.getvalue()
