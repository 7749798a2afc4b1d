"""Runtime settings read from the environment (and a local ``.env`` file)."""

from __future__ import annotations

import os
from typing import Any, Literal, Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field

from lexpacking.errors import ConfigError

ENV_PREFIX = "LEXPACK_"


class Settings(BaseModel):
    """Defaults for solver budgets and log output."""

    budget_seconds: Optional[float] = Field(default=60.0, gt=0)
    budget_nodes: Optional[int] = Field(default=None, gt=0)
    log_level: str = "WARNING"
    log_format: Literal["console", "json"] = "console"
    progress_interval: int = Field(default=100_000, gt=0)


def _read(name: str) -> Optional[str]:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None:
        return None
    raw = raw.strip()
    return raw or None


def _optional_number(name: str, cast: type, default: Any) -> Any:
    raw = _read(name)
    if raw is None:
        return default
    # "none" switches a budget off entirely
    if raw.lower() in {"none", "off", "unlimited"}:
        return None
    try:
        return cast(raw)
    except ValueError as exc:
        raise ConfigError(f"{ENV_PREFIX}{name} must be a number, got {raw!r}") from exc


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Build :class:`Settings` from ``LEXPACK_*`` variables.

    A ``.env`` file in the working directory (or ``env_file``) is loaded first;
    variables already present in the environment win.
    """
    load_dotenv(env_file or find_dotenv(usecwd=True), override=False)

    values: dict[str, Any] = {
        "budget_seconds": _optional_number("BUDGET_SECONDS", float, 60.0),
        "budget_nodes": _optional_number("BUDGET_NODES", int, None),
        "log_level": (_read("LOG_LEVEL") or "WARNING").upper(),
        "log_format": (_read("LOG_FORMAT") or "console").lower(),
    }
    interval = _optional_number("PROGRESS_INTERVAL", int, 100_000)
    if interval is not None:
        values["progress_interval"] = interval

    try:
        return Settings(**values)
    except ValueError as exc:
        raise ConfigError(f"invalid lexpacking settings: {exc}") from exc
