"""
Configuration management for SEA MTT.

Uses Pydantic for validation. JSON is the documented syntax; files ending in
.yaml or .yml are read and written with PyYAML against the same schema.
"""

import json
import os
import tempfile
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from pydantic_core import PydanticCustomError

from sea_mtt.constants import (
    DEFAULT_BL,
    DEFAULT_BM,
    DEFAULT_DERATE_BAND,
    DEFAULT_DT,
    DEFAULT_GRID_POINTS,
    DEFAULT_JL,
    DEFAULT_JM,
    DEFAULT_KD,
    DEFAULT_KP,
    DEFAULT_KS,
    DEFAULT_NM,
    DEFAULT_OMEGA_MAX,
    DEFAULT_OMEGA_MIN,
    DEFAULT_TMC,
    DEFAULT_VP,
    LOAD_DYNAMIC,
)
from sea_mtt.core.model import ControllerParams, LoadCase, SeaParams
from sea_mtt.core.mtt import FrequencyGrid
from sea_mtt.exceptions import ConfigError

YAML_SUFFIXES = (".yaml", ".yml")


class GridConfig(BaseModel):
    """Frequency search grid."""

    model_config = ConfigDict(extra="forbid")

    omega_min: float = Field(DEFAULT_OMEGA_MIN, gt=0)
    omega_max: float = Field(DEFAULT_OMEGA_MAX, gt=0)
    points: int = Field(DEFAULT_GRID_POINTS, ge=2)

    @model_validator(mode="after")
    def check_range(self) -> "GridConfig":
        if self.omega_min >= self.omega_max:
            raise ValueError("omega_min must be smaller than omega_max")
        return self

    def to_grid(self) -> FrequencyGrid:
        return FrequencyGrid(self.omega_min, self.omega_max, self.points)


class SimSettings(BaseModel):
    """Simulation settings."""

    model_config = ConfigDict(extra="forbid")

    dt: float = Field(DEFAULT_DT, gt=0)
    duration: Optional[float] = Field(None, gt=0)
    derate_band: float = Field(DEFAULT_DERATE_BAND, gt=0)


class SeaConfig(BaseModel):
    """SEA parameters, controller gains, search grid and simulation settings."""

    model_config = ConfigDict(extra="forbid")

    jm: float = Field(DEFAULT_JM, gt=0)
    # only a free load needs an inertia, see check_load_inertia
    jl: float = Field(DEFAULT_JL, ge=0)
    bm: float = Field(DEFAULT_BM, gt=0)
    bl: float = Field(DEFAULT_BL, ge=0)
    ks: float = Field(DEFAULT_KS, gt=0)
    nm: float = Field(DEFAULT_NM, gt=0)
    tmc: float = Field(DEFAULT_TMC, gt=0)
    vp: float = Field(DEFAULT_VP, gt=0)
    load_case: Literal["dynamic", "static"] = LOAD_DYNAMIC
    kp: float = Field(DEFAULT_KP, gt=0)
    kd: float = Field(DEFAULT_KD, ge=0)
    grid: GridConfig = Field(default_factory=GridConfig)
    sim: SimSettings = Field(default_factory=SimSettings)

    @model_validator(mode="after")
    def check_load_inertia(self) -> "SeaConfig":
        if self.load_case == LOAD_DYNAMIC and self.jl <= 0:
            raise PydanticCustomError(
                "dynamic_load_inertia",
                "{key} must be greater than 0 for a dynamic load",
                {"key": "jl"},
            )
        return self

    def to_params(self) -> SeaParams:
        return SeaParams(
            j_m=self.jm,
            j_l=self.jl,
            b_m=self.bm,
            b_l=self.bl,
            k_s=self.ks,
            n_m=self.nm,
            t_mc=self.tmc,
            v_p=self.vp,
            load_case=LoadCase(self.load_case),
        )

    def to_controller(self) -> ControllerParams:
        return ControllerParams(k_p=self.kp, k_d=self.kd)

    def to_grid(self) -> FrequencyGrid:
        return self.grid.to_grid()

    @classmethod
    def from_dict(cls, data: dict) -> "SeaConfig":
        """Validate a parsed document, naming the offending key on failure."""
        if not isinstance(data, dict):
            raise ConfigError("Configuration must be a JSON object")
        try:
            return cls(**data)
        except ValidationError as e:
            first = e.errors()[0]
            key = ".".join(str(part) for part in first["loc"]) or None
            if key is None:
                key = first.get("ctx", {}).get("key")
            if first["type"] == "extra_forbidden":
                message = f"Unknown configuration key: {key}"
            else:
                message = f"Invalid value for {key}: {first['msg']}" if key else first["msg"]
            raise ConfigError(message, key=key)

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "SeaConfig":
        """Load configuration from a JSON (or YAML) file; defaults when no path is given."""
        if path is None:
            return cls()

        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Cannot read config file {path}: {e.strerror or e}")

        if path.suffix.lower() in YAML_SUFFIXES:
            try:
                data = yaml.safe_load(text) or {}
            except yaml.YAMLError as e:
                mark = getattr(e, "problem_mark", None)
                line = mark.line + 1 if mark else None
                column = mark.column + 1 if mark else None
                raise ConfigError(
                    f"Error parsing config file {path}: {e}", line=line, column=column
                )
        else:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConfigError(
                    f"Error parsing config file {path} at line {e.lineno}, column {e.colno}: {e.msg}",
                    line=e.lineno,
                    column=e.colno,
                )

        return cls.from_dict(data)

    def dump(self, path: Optional[Path] = None) -> str:
        """Render as JSON, or YAML when ``path`` has a YAML suffix."""
        data = self.model_dump(mode="json")
        if path is not None and Path(path).suffix.lower() in YAML_SUFFIXES:
            return yaml.dump(data, default_flow_style=False, sort_keys=False)
        return json.dumps(data, indent=2) + "\n"

    def save(self, path: Path) -> None:
        """Save configuration atomically."""
        write_atomic(Path(path), self.dump(path))


def write_atomic(path: Path, text: str) -> None:
    """Write the whole file through a temporary sibling and a rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
