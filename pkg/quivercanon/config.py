"""Run configuration for the check suites and exports."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence
import logging
import os

import yaml


logger = logging.getLogger(__name__)

SUITES = ("relations", "twisted", "signs", "mutation", "crystal", "bases", "shadow", "quasi_r")
DEFAULT_CONFIG_PATH = Path("quivercanon.yaml")


def parse_vector(text: str) -> List[int]:
    """'1,2' or '(1, 2)' or '[1 2]' -> [1, 2]."""
    cleaned = text.strip().strip("()[]").replace(",", " ")
    try:
        return [int(part) for part in cleaned.split()]
    except ValueError as e:
        raise ValueError(f"Invalid integer vector: {text!r}") from e


def parse_order(text: str) -> List[str]:
    cleaned = text.strip().strip("()[]").replace(",", " ")
    return cleaned.split()


@dataclass
class RunConfig:
    """Everything one run of quivercanon needs."""

    # Input
    quiver_path: Optional[Path] = None
    weight: Optional[List[int]] = None
    weight2: Optional[List[int]] = None

    # Bounds and conventions
    height: int = 4
    order: Optional[List[str]] = None

    # Suites
    suites: List[str] = field(default_factory=lambda: list(SUITES))
    seed: int = 0
    sign_samples: int = 1000
    mutation_samples: int = 100
    quasi_r: Optional[bool] = None

    # Output
    out_dir: Path = Path("reports")

    @property
    def run_quasi_r(self) -> bool:
        """Defaults to on exactly when a second weight is configured."""
        if self.quasi_r is None:
            return self.weight2 is not None
        return self.quasi_r

    @classmethod
    def from_yaml(cls, path: Path) -> "RunConfig":
        """Load config from YAML file."""
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} does not contain a mapping")

        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"Unknown config keys in {path}: {sorted(unknown)}")

        if data.get("quiver_path") is not None:
            data["quiver_path"] = Path(data["quiver_path"]).expanduser()
        if "out_dir" in data:
            data["out_dir"] = Path(data["out_dir"]).expanduser()
        for key in ("weight", "weight2"):
            if isinstance(data.get(key), str):
                data[key] = parse_vector(data[key])
        if isinstance(data.get("order"), str):
            data["order"] = parse_order(data["order"])

        return cls(**data)

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Copy with every non-None override applied."""
        data = dict(self.__dict__)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**data)

    def validate(self) -> None:
        """Validate configuration and prepare the output directory."""
        if self.height < 0:
            raise ValueError(f"height must be >= 0, got {self.height}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"Unknown suites {unknown}. Valid options: {list(SUITES)}")
        if self.sign_samples <= 0 or self.mutation_samples <= 0:
            raise ValueError("sign_samples and mutation_samples must be positive")
        for name, vector in (("weight", self.weight), ("weight2", self.weight2)):
            if vector is not None and any(a < 0 for a in vector):
                raise ValueError(f"{name} {vector} is not dominant")

        self.out_dir.mkdir(parents=True, exist_ok=True)
        if not os.access(self.out_dir, os.W_OK):
            raise PermissionError(f"Output directory not writable: {self.out_dir}")

        logger.debug(f"Config validation passed: suites={self.suites}, out_dir={self.out_dir}")

    def needs_quiver(self, suites: Sequence[str]) -> bool:
        return any(s not in ("signs", "mutation") for s in suites)

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary for serialization."""
        result = {}
        for key, value in self.__dict__.items():
            if isinstance(value, Path):
                result[key] = str(value)
            else:
                result[key] = value
        return result

    def save_yaml(self, path: Path) -> None:
        """Save config to YAML file."""
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=True)

        logger.info(f"Config saved to {path}")

    @classmethod
    def load_or_create(cls, config_path: Optional[Path] = None) -> "RunConfig":
        """Load config from file or write the defaults there."""
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH

        if config_path.exists():
            logger.info(f"Loading config from {config_path}")
            config = cls.from_yaml(config_path)
        else:
            logger.info(f"No config file at {config_path}, writing defaults")
            config = cls()
            config.save_yaml(config_path)

        return config
