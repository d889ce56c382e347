"""Configuration schema and loader."""

from pathlib import Path
from typing import Literal

import yaml
from loguru import logger
from pydantic import BaseModel, Field, PositiveFloat, PrivateAttr, field_validator

FROM_WOODS_SAXON = "from-woods-saxon"

OutputFormat = Literal["text", "json", "csv"]


class WoodsSaxonConfig(BaseModel):
    r_half_fm: PositiveFloat = 1.07
    skin_fm: PositiveFloat = 0.55


class HydrogenConfig(BaseModel):
    n: int = Field(default=1, ge=1)
    R_p_fm: float | Literal["from-woods-saxon"] = 1.4
    R_H: PositiveFloat | None = None     # derived from h, M_e, nu_H when unset
    k1: PositiveFloat | None = None      # pi n / R_H when unset
    rp_window_fm: tuple[float, float] = (0.5, 3.0)

    @field_validator("rp_window_fm")
    @classmethod
    def _ordered_window(cls, value: tuple[float, float]) -> tuple[float, float]:
        lo, hi = value
        if not 0.0 < lo < hi:
            raise ValueError(f"rp_window_fm must satisfy 0 < lo < hi, got {value!r}")
        return value


class OscillatorConfig(BaseModel):
    R_p_fm: float | Literal["from-woods-saxon"] = 1.4
    d_over_Rp: float = Field(default=4.6e-6, gt=0.0, lt=1.0 / 3.0)
    nu: PositiveFloat | None = None      # hydrogen frequency when unset
    beta: PositiveFloat = 1.0
    samples: int = Field(default=64, ge=2)
    probe_r_over_Rp: float = Field(default=2.0, ge=1.0)
    woods_saxon: WoodsSaxonConfig = Field(default_factory=WoodsSaxonConfig)


class GravityConfig(BaseModel):
    k_u: PositiveFloat = 1.0
    mass: float | Literal["M_p"] = "M_p"
    nu_E: PositiveFloat | None = None    # hydrogen frequency when unset
    decade_rounding: bool = True
    solar_comparator_W_per_m2: PositiveFloat = 300.0


class NumericsConfig(BaseModel):
    rel_tol: float = Field(default=1e-10, ge=1e-14, le=1e-2)
    root_tol: PositiveFloat = 1e-9
    poisson_points: int = Field(default=1024, ge=64)
    poisson_extent: float = Field(default=8.0, gt=1.0)   # multiples of the source radius


class OutputConfig(BaseModel):
    format: OutputFormat | None = None   # per-command default when unset
    sig_digits_machine: int = Field(default=17, ge=1, le=17)
    sig_digits_text: int = Field(default=4, ge=1, le=17)


class Config(BaseModel):
    """Root configuration."""
    constants: str | None = None         # path to a key=value override file
    hydrogen: HydrogenConfig = Field(default_factory=HydrogenConfig)
    oscillator: OscillatorConfig = Field(default_factory=OscillatorConfig)
    gravity: GravityConfig = Field(default_factory=GravityConfig)
    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    _config_dir: Path = PrivateAttr(default_factory=lambda: Path.cwd())

    def constants_path(self) -> Path | None:
        """Override file path, resolved against the config file's directory."""
        if not self.constants:
            return None
        path = Path(self.constants).expanduser()
        if not path.is_absolute():
            path = self._config_dir / path
        return path.resolve()


def load_config(path: str | Path = "config.yaml") -> Config:
    """Load config from YAML file. A missing file yields the defaults."""
    p = Path(path).expanduser()
    resolved_path = p.resolve()
    if p.exists():
        with open(resolved_path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        config = Config(**data)
        logger.info(f"Loaded config from {resolved_path}")
    else:
        config = Config()
        logger.debug(f"No config at {resolved_path}; using defaults")
    config._config_dir = resolved_path.parent
    return config
