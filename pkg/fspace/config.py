"""
Runtime configuration: size caps for the exponential operations.
"""

import json
import os
from collections.abc import Mapping
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any

import yaml

from fspace.errors import ConfigError

SIZE_LIMIT_ENV = "FSPACE_SIZE_LIMIT"
GAMMA_LIMIT_ENV = "FSPACE_GAMMA_LIMIT"
ENUMERATION_LIMIT_ENV = "FSPACE_ENUMERATION_LIMIT"


def _parse_limit(name: str, raw: Any) -> int:
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass
class FspaceConfig:
    """Size caps applied when an operation is called without an explicit limit.

    Args:
        gamma_limit: Largest poset accepted by the Γ subset sums (2^n
            determinants). Default: 14.
        enumeration_limit: Largest n accepted by ``enumerate_posets``.
            Default: 7.
        bruteforce_limit: Largest n accepted by the brute-force permutation
            oracle for homeomorphism. Default: 8.
    """

    gamma_limit: int = 14
    enumeration_limit: int = 7
    bruteforce_limit: int = 8

    def __post_init__(self) -> None:
        for f in fields(self):
            setattr(self, f.name, _parse_limit(f.name, getattr(self, f.name)))

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "FspaceConfig":
        """Defaults overridden by ``FSPACE_SIZE_LIMIT`` and the specific
        ``FSPACE_GAMMA_LIMIT`` / ``FSPACE_ENUMERATION_LIMIT`` variables."""
        env = os.environ if environ is None else environ
        config = cls()
        shared = env.get(SIZE_LIMIT_ENV)
        if shared:
            config.gamma_limit = _parse_limit(SIZE_LIMIT_ENV, shared)
            config.enumeration_limit = _parse_limit(SIZE_LIMIT_ENV, shared)
        if env.get(GAMMA_LIMIT_ENV):
            config.gamma_limit = _parse_limit(GAMMA_LIMIT_ENV, env[GAMMA_LIMIT_ENV])
        if env.get(ENUMERATION_LIMIT_ENV):
            config.enumeration_limit = _parse_limit(
                ENUMERATION_LIMIT_ENV, env[ENUMERATION_LIMIT_ENV]
            )
        return config

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FspaceConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")
        return cls(**dict(data))

    @classmethod
    def from_file(cls, file_path: str | Path) -> "FspaceConfig":
        """Load a configuration from a JSON or YAML mapping."""
        path = Path(file_path)
        with open(path, encoding="utf-8") as f:
            if path.suffix.lower() in (".yaml", ".yml"):
                data = yaml.safe_load(f)
            else:
                data = json.load(f)
        if not isinstance(data, dict):
            raise ConfigError(f"Invalid config file (expected a mapping): {path}")
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def resolve_limit(limit: int | None, attribute: str) -> int:
    """An explicit limit wins; otherwise the environment-derived default."""
    if limit is not None:
        return _parse_limit(attribute, limit)
    return int(getattr(FspaceConfig.from_env(), attribute))
