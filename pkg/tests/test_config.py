import json

import pytest
import yaml

from fspace.config import FspaceConfig, resolve_limit
from fspace.errors import ConfigError


class TestFspaceConfig:
    def test_defaults(self):
        config = FspaceConfig()
        assert config.to_dict() == {
            "gamma_limit": 14,
            "enumeration_limit": 7,
            "bruteforce_limit": 8,
        }

    def test_values_are_validated(self):
        with pytest.raises(ConfigError, match="positive"):
            FspaceConfig(gamma_limit=0)
        with pytest.raises(ConfigError, match="integer"):
            FspaceConfig(enumeration_limit="many")

    def test_from_env_shared_limit(self):
        config = FspaceConfig.from_env({"FSPACE_SIZE_LIMIT": "5"})
        assert (config.gamma_limit, config.enumeration_limit) == (5, 5)
        assert config.bruteforce_limit == 8

    def test_specific_limits_win(self):
        config = FspaceConfig.from_env(
            {"FSPACE_SIZE_LIMIT": "5", "FSPACE_GAMMA_LIMIT": "10"}
        )
        assert (config.gamma_limit, config.enumeration_limit) == (10, 5)

    def test_bad_environment_value(self):
        with pytest.raises(ConfigError, match="FSPACE_ENUMERATION_LIMIT"):
            FspaceConfig.from_env({"FSPACE_ENUMERATION_LIMIT": "-3"})

    def test_from_yaml_file(self, tmp_path):
        path = tmp_path / "limits.yaml"
        path.write_text(yaml.safe_dump({"gamma_limit": 9}), encoding="utf-8")
        assert FspaceConfig.from_file(path).gamma_limit == 9

    def test_from_json_file(self, tmp_path):
        path = tmp_path / "limits.json"
        path.write_text(json.dumps({"bruteforce_limit": 6}), encoding="utf-8")
        assert FspaceConfig.from_file(path).bruteforce_limit == 6

    def test_unknown_keys(self):
        with pytest.raises(ConfigError, match="Unknown configuration keys: colour"):
            FspaceConfig.from_dict({"colour": 1})

    def test_file_must_hold_a_mapping(self, tmp_path):
        path = tmp_path / "limits.yml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="expected a mapping"):
            FspaceConfig.from_file(path)


class TestResolveLimit:
    def test_explicit_value(self):
        assert resolve_limit(3, "gamma_limit") == 3

    def test_environment_default(self, monkeypatch):
        assert resolve_limit(None, "gamma_limit") == 14
        monkeypatch.setenv("FSPACE_GAMMA_LIMIT", "4")
        assert resolve_limit(None, "gamma_limit") == 4

    def test_explicit_value_is_checked(self):
        with pytest.raises(ConfigError):
            resolve_limit(0, "enumeration_limit")
