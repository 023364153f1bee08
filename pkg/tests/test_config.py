"""Service configuration precedence and validation tests."""

from __future__ import annotations

import pytest
import yaml

from docexplore.service import ConfigError, ServiceConfig, load_config


def test_defaults():
    cfg = load_config()
    assert cfg.port == 8000
    assert cfg.seed == 1337
    assert cfg.topics == 5
    assert cfg.min_duration_s == 1.0
    assert cfg.canvas_width == 800


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "conf.yaml"
    path.write_text(yaml.safe_dump({"port": 9001, "topics": 3}))
    cfg = load_config(path)
    assert cfg.port == 9001
    assert cfg.topics == 3
    assert cfg.seed == 1337  # untouched


def test_env_overrides_file(tmp_path):
    path = tmp_path / "conf.yaml"
    path.write_text(yaml.safe_dump({"port": 9001}))
    cfg = load_config(path, env={"DOCEXPLORE_PORT": "9002", "DOCEXPLORE_SEED": "7"})
    assert cfg.port == 9002
    assert cfg.seed == 7


def test_explicit_overrides_beat_env(tmp_path):
    cfg = load_config(env={"DOCEXPLORE_PORT": "9002"}, overrides={"port": 9003})
    assert cfg.port == 9003


def test_env_type_coercion():
    cfg = load_config(
        env={
            "DOCEXPLORE_MIN_DURATION_S": "2.5",
            "DOCEXPLORE_ITERATIONS": "99",
        }
    )
    assert cfg.min_duration_s == 2.5
    assert cfg.iterations == 99


def test_unrelated_env_ignored():
    cfg = load_config(env={"HOME": "/root", "DOCEXPLORE_PORT": "1234"})
    assert cfg.port == 1234


def test_unknown_file_key_rejected(tmp_path):
    path = tmp_path / "conf.yaml"
    path.write_text(yaml.safe_dump({"portt": 1}))
    with pytest.raises(ConfigError):
        load_config(path)


def test_bad_coercion_rejected():
    with pytest.raises(ConfigError):
        load_config(env={"DOCEXPLORE_PORT": "not-a-number"})


def test_validation_bounds():
    with pytest.raises(ConfigError):
        ServiceConfig(port=-80).validate()
    with pytest.raises(ConfigError):
        ServiceConfig(topics=0).validate()
    with pytest.raises(ConfigError):
        ServiceConfig(min_duration_s=-1.0).validate()
    with pytest.raises(ConfigError):
        ServiceConfig(min_font=30.0, max_font=20.0).validate()


def test_missing_file_rejected(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml")
