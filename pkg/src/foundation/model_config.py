"""
Experiment, solver and threshold configuration.

config/settings.yaml is the single source of defaults; every getter merges
caller overrides on top of it. An alternate settings file may be named
through the BESOV_LAB_SETTINGS environment variable. A missing or malformed
file, or one without a required section, raises ConfigurationError.
"""

from __future__ import annotations

import logging
import math
import os
from copy import deepcopy
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from src.foundation.errors import ConfigurationError

logger = logging.getLogger(__name__)

_PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
DEFAULT_SETTINGS_PATH = _PROJECT_ROOT / "config" / "settings.yaml"

THREADS_ENV = "BESOV_LAB_THREADS"
SETTINGS_ENV = "BESOV_LAB_SETTINGS"

REQUIRED_SECTIONS = ("experiment", "solver", "thresholds", "runtime")


def _settings_path(path: Optional[str] = None) -> Path:
    if path:
        return Path(path)
    env_path = os.environ.get(SETTINGS_ENV)
    if env_path:
        return Path(env_path)
    return DEFAULT_SETTINGS_PATH


@lru_cache(maxsize=8)
def _load_yaml(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
    except FileNotFoundError:
        raise ConfigurationError(f"settings file {path} not found", field="settings", path=path)
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"settings file {path} is not valid YAML: {exc}", field="settings", path=path)
    if not isinstance(loaded, dict):
        loaded = {}
    missing = [s for s in REQUIRED_SECTIONS if not isinstance(loaded.get(s), dict)]
    if missing:
        raise ConfigurationError(
            f"settings file {path} lacks section(s) {', '.join(missing)}", field="settings", path=path
        )
    logger.debug("Loaded settings from %s", path)
    return loaded


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """Return a copy of the settings tree read from the settings file."""
    return deepcopy(_load_yaml(str(_settings_path(path))))


def _section(name: str, overrides: Optional[Dict[str, Any]], path: Optional[str]) -> Dict[str, Any]:
    values = dict(load_settings(path)[name])
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return values


def get_experiment_defaults(
    overrides: Optional[Dict[str, Any]] = None, path: Optional[str] = None
) -> Dict[str, Any]:
    """Return construction/experiment parameters with ``domain_L`` resolved."""
    values = _section("experiment", overrides, path)
    if "domain_L" not in values or values["domain_L"] is None:
        values["domain_L"] = float(values["domain_L_over_pi"]) * math.pi
    return values


def get_solver_params(
    overrides: Optional[Dict[str, Any]] = None, path: Optional[str] = None
) -> Dict[str, Any]:
    """Return time-stepping parameters."""
    return _section("solver", overrides, path)


def get_check_thresholds(
    overrides: Optional[Dict[str, Any]] = None, path: Optional[str] = None
) -> Dict[str, Any]:
    """Return pass/fail thresholds used by ``--check``."""
    return _section("thresholds", overrides, path)


def get_thread_count() -> int:
    """Worker threads for experiments and FFTs (BESOV_LAB_THREADS, default 1)."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", THREADS_ENV, raw)
        return 1
