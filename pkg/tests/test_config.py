import json
import logging

import pytest
import structlog

from lexpacking.config import Settings, load_settings
from lexpacking.errors import ConfigError
from lexpacking.logging_config import configure_logging
from lexpacking.solver import default_budget


def test_defaults():
    settings = load_settings()
    assert settings.budget_seconds == 60.0
    assert settings.budget_nodes is None
    assert settings.log_level == "WARNING"
    assert settings.log_format == "console"
    assert settings.progress_interval == 100_000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LEXPACK_BUDGET_SECONDS", "5.5")
    monkeypatch.setenv("LEXPACK_BUDGET_NODES", "1000")
    monkeypatch.setenv("LEXPACK_LOG_LEVEL", "debug")
    monkeypatch.setenv("LEXPACK_LOG_FORMAT", "JSON")
    settings = load_settings()
    assert settings.budget_seconds == 5.5
    assert settings.budget_nodes == 1000
    assert settings.log_level == "DEBUG"
    assert settings.log_format == "json"

    budget = default_budget()
    assert budget.seconds == 5.5
    assert budget.nodes == 1000


def test_budget_can_be_switched_off(monkeypatch):
    monkeypatch.setenv("LEXPACK_BUDGET_SECONDS", "none")
    assert load_settings().budget_seconds is None


@pytest.mark.parametrize(
    "name,value",
    [
        ("LEXPACK_BUDGET_SECONDS", "soon"),
        ("LEXPACK_BUDGET_SECONDS", "-1"),
        ("LEXPACK_BUDGET_NODES", "0"),
        ("LEXPACK_LOG_FORMAT", "xml"),
        ("LEXPACK_PROGRESS_INTERVAL", "0"),
    ],
)
def test_invalid_values_raise_config_error(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        load_settings()


def test_env_file_is_read_without_overriding_environment(monkeypatch, tmp_path):
    env_file = tmp_path / "custom.env"
    env_file.write_text("LEXPACK_BUDGET_NODES=77\nLEXPACK_LOG_LEVEL=INFO\n")
    monkeypatch.setenv("LEXPACK_LOG_LEVEL", "ERROR")
    # load_dotenv writes into os.environ; let monkeypatch undo it
    monkeypatch.setenv("LEXPACK_BUDGET_NODES", "")
    monkeypatch.delenv("LEXPACK_BUDGET_NODES")

    settings = load_settings(str(env_file))
    assert settings.budget_nodes == 77
    assert settings.log_level == "ERROR"


def test_json_logging_goes_to_stderr(capsys):
    root = logging.getLogger()
    saved_handlers, saved_level = list(root.handlers), root.level
    try:
        configure_logging(Settings(log_level="INFO", log_format="json"))
        formatter = root.handlers[0].formatter
        assert isinstance(formatter, structlog.stdlib.ProcessorFormatter)
        logging.getLogger("lexpacking.test").info("solver started")
        captured = capsys.readouterr()
        assert captured.out == ""
        line = json.loads(captured.err.strip().splitlines()[-1])
        assert line["event"] == "solver started"
        assert line["level"] == "info"
    finally:
        root.handlers[:] = saved_handlers
        root.setLevel(saved_level)
