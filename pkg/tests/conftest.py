"""Configuration for pytest."""

import sys
from pathlib import Path
import pytest

# repository root, so tests run without an install
sys.path.insert(0, str(Path(__file__).parent.parent))

from lexpacking.graphs import generate  # noqa: E402
from lexpacking.models import Graph  # noqa: E402


@pytest.fixture(autouse=True)
def clear_lexpack_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep tests independent from the developer's LEXPACK_* variables and .env file."""
    for name in (
        "LEXPACK_BUDGET_SECONDS",
        "LEXPACK_BUDGET_NODES",
        "LEXPACK_LOG_LEVEL",
        "LEXPACK_LOG_FORMAT",
        "LEXPACK_PROGRESS_INTERVAL",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def p4() -> Graph:
    return generate("path:4")


@pytest.fixture
def p8() -> Graph:
    return generate("path:8")


@pytest.fixture
def p6() -> Graph:
    return generate("path:6")


@pytest.fixture
def k3() -> Graph:
    return generate("complete:3")


@pytest.fixture
def petersen() -> Graph:
    return generate("petersen")
