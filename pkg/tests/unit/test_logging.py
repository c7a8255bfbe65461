"""Unit tests for the loguru configuration helper."""

import pytest

from qrabi.logging import LogLevels, configure_logging, logger


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    configure_logging(LogLevels.ERROR)


def test_log_file_is_created(tmp_path):
    """Test that configure_logging creates the parent directory and writes to the file sink."""
    log_file = tmp_path / "logs" / "qrabi.log"
    configure_logging("INFO", str(log_file))

    logger.info("sweep finished")
    logger.complete()
    logger.remove()

    assert log_file.exists()
    assert "sweep finished" in log_file.read_text()


def test_level_filters_messages(tmp_path):
    """Test that messages below the configured level are dropped."""
    log_file = tmp_path / "qrabi.log"
    configure_logging("WARNING", str(log_file))

    logger.info("hidden")
    logger.warning("shown")
    logger.complete()
    logger.remove()

    content = log_file.read_text()
    assert "shown" in content
    assert "hidden" not in content


def test_unknown_level_falls_back_to_error(tmp_path):
    """Test that an unknown level name is replaced by ERROR instead of raising."""
    log_file = tmp_path / "qrabi.log"
    configure_logging("verbose", str(log_file))

    logger.warning("dropped")
    logger.error("kept")
    logger.complete()
    logger.remove()

    content = log_file.read_text()
    assert "kept" in content
    assert "dropped" not in content


def test_lowercase_level_is_accepted(capsys):
    """Test that level names are case-insensitive and the console sink is stderr."""
    configure_logging("debug")
    logger.debug("diagnostic")

    captured = capsys.readouterr()
    assert "diagnostic" in captured.err
    assert captured.out == ""
