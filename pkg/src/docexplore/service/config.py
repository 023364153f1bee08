"""Service configuration: defaults, YAML file, environment, CLI flags.

Precedence, lowest to highest: built-in defaults < config file < environment
variables prefixed DOCEXPLORE_ < explicit overrides (CLI flags).
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Mapping

import yaml

ENV_PREFIX = "DOCEXPLORE_"


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    library_dir: str | None = None
    session_dir: str = "sessions"
    host: str = "127.0.0.1"
    port: int = 8000
    seed: int = 1337
    topics: int = 5
    iterations: int = 500
    terms_per_topic: int = 10
    chunk_size: int = 200
    min_duration_s: float = 1.0
    max_visible_transitions: int = 10
    canvas_width: int = 800
    canvas_height: int = 600
    min_font: float = 12.0
    max_font: float = 48.0
    taxonomy_path: str | None = None
    stopwords_path: str | None = None
    lexicon_path: str | None = None

    def validate(self) -> "ServiceConfig":
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port out of range: {self.port}")
        for name in ("topics", "iterations", "terms_per_topic", "chunk_size",
                     "max_visible_transitions", "canvas_width", "canvas_height"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if self.min_duration_s < 0:
            raise ConfigError("min_duration_s must be >= 0")
        if self.min_font <= 0 or self.max_font < self.min_font:
            raise ConfigError("need 0 < min_font <= max_font")
        return self


_FIELD_TYPES = {f.name: f.type for f in fields(ServiceConfig)}


def _coerce(name: str, raw: object):
    declared = _FIELD_TYPES[name]
    if declared in ("int", int):
        if isinstance(raw, bool) or (not isinstance(raw, int) and not _is_intish(raw)):
            raise ConfigError(f"{name} must be an integer, got {raw!r}")
        return int(raw)  # type: ignore[arg-type]
    if declared in ("float", float):
        try:
            return float(raw)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            raise ConfigError(f"{name} must be a number, got {raw!r}") from None
    if raw is not None and not isinstance(raw, str):
        raise ConfigError(f"{name} must be a string, got {raw!r}")
    return raw


def _is_intish(raw: object) -> bool:
    if isinstance(raw, str):
        try:
            int(raw)
            return True
        except ValueError:
            return False
    return False


def _apply(config: ServiceConfig, values: Mapping[str, object], origin: str) -> ServiceConfig:
    updates = {}
    for key, raw in values.items():
        name = key.lower()
        if name not in _FIELD_TYPES:
            raise ConfigError(f"{origin}: unknown setting {key!r}")
        if raw is not None:
            updates[name] = _coerce(name, raw)
    return replace(config, **updates) if updates else config


def load_config(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
    overrides: Mapping[str, object] | None = None,
) -> ServiceConfig:
    config = ServiceConfig()
    if path is not None:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError as exc:
            raise ConfigError(f"cannot parse config file {path}: {exc}") from exc
        if not isinstance(data, Mapping):
            raise ConfigError(f"config file {path} must hold a mapping")
        config = _apply(config, data, f"config file {path}")
    env = os.environ if env is None else env
    env_values = {
        key[len(ENV_PREFIX):]: value
        for key, value in env.items()
        if key.startswith(ENV_PREFIX) and key[len(ENV_PREFIX):].lower() in _FIELD_TYPES
    }
    config = _apply(config, env_values, "environment")
    if overrides:
        config = _apply(config, overrides, "flags")
    return config.validate()
