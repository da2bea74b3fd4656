# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Run configuration: built-in defaults, then the ``[pypolyzeta]`` table of an
optional TOML file, then command-line flags.
"""

import dataclasses
import os
from pathlib import Path
from typing import Any, Mapping, Optional

import tomlkit
from tomlkit.exceptions import ParseError

# pyre-strict

CACHE_ENV_VAR: str = "PYPOLYZETA_CACHE_DIR"
CONFIG_TABLE: str = "pypolyzeta"

COMMANDS: tuple[str, ...] = (
    "lyndon",
    "basis",
    "relations",
    "reduce",
    "gamma",
    "verify",
    "numcheck",
)
FORMATS: tuple[str, ...] = ("text", "json")
SIDE_CHOICES: tuple[str, ...] = ("x", "y", "both")


def default_cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "pypolyzeta"


@dataclasses.dataclass
class RunConfig:
    command: str = "relations"
    max_weight: int = 4
    side: str = "both"
    format: str = "text"
    alphabet: Optional[str] = None
    kind: str = "S"
    word: str = ""
    regularization: str = "stuffle"
    n: int = 10**5
    tol: float = 1e-3
    digits: int = 60
    refine: bool = True
    cache_dir: Optional[str] = None
    use_cache: bool = True

    def validate(self) -> None:
        """
        :raises ValueError: On a value outside its closed set or range.
        """
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}; expected one of {COMMANDS}.")
        if self.format not in FORMATS:
            raise ValueError(f"Unknown format {self.format!r}; expected one of {FORMATS}.")
        if self.side not in SIDE_CHOICES:
            raise ValueError(f"Unknown side {self.side!r}; expected one of {SIDE_CHOICES}.")
        if self.alphabet not in (None, "x", "y"):
            raise ValueError(f"Unknown alphabet {self.alphabet!r}; expected 'x' or 'y'.")
        minimum = 2 if self.command in ("relations", "verify") else 1
        if self.max_weight < minimum:
            raise ValueError(
                f"--max-weight must be >= {minimum} for {self.command}, got {self.max_weight}."
            )
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}.")
        if self.tol <= 0:
            raise ValueError(f"tol must be positive, got {self.tol}.")
        if self.digits < 15:
            raise ValueError(f"digits must be >= 15, got {self.digits}.")

    def resolved_cache_dir(self) -> Path:
        return Path(self.cache_dir) if self.cache_dir else default_cache_dir()


FIELD_NAMES: frozenset[str] = frozenset(f.name for f in dataclasses.fields(RunConfig))


def _plain(value: Any) -> Any:
    # tomlkit items wrap the builtin types
    return value.unwrap() if hasattr(value, "unwrap") else value


def load_config_file(path: str | os.PathLike[str]) -> dict[str, Any]:
    """
    Read the ``[pypolyzeta]`` table of a TOML file.

    :raises ValueError: If the file cannot be parsed or has unknown keys.
    """
    try:
        with open(path, "r") as file:
            document = tomlkit.parse(file.read())
    except OSError as e:
        raise ValueError(f"Cannot read config file {path}: {e}") from e
    except ParseError as e:
        raise ValueError(f"Malformed config file {path}: {e}") from e
    table = _plain(document.get(CONFIG_TABLE, {}))
    if not isinstance(table, dict):
        raise ValueError(f"[{CONFIG_TABLE}] in {path} must be a table.")
    unknown = sorted(set(table) - FIELD_NAMES)
    if unknown:
        raise ValueError(f"Unknown keys in [{CONFIG_TABLE}] of {path}: {', '.join(unknown)}.")
    return dict(table)


def build_config(
    overrides: Mapping[str, Any], config_path: Optional[str] = None
) -> RunConfig:
    """
    Merge defaults, the config file and explicit flags; ``None`` flags are unset.

    :raises ValueError: On unknown or invalid values.
    """
    values: dict[str, Any] = {}
    if config_path:
        values.update(load_config_file(config_path))
    values.update({k: v for k, v in overrides.items() if v is not None and k in FIELD_NAMES})
    try:
        config = RunConfig(**values)
    except TypeError as e:
        raise ValueError(str(e)) from e
    config.validate()
    return config
