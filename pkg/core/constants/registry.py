"""Constant registry - single source of truth for every physical input."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator

Provenance = Literal["default", "overridden", "derived"]


@dataclass(frozen=True)
class ConstantSpec:
    name: str
    default: float
    unit: str
    description: str = ""


# CODATA-2018 SI values plus the hydrogen frequency and the natural-unit hbar.
CONSTANTS: tuple[ConstantSpec, ...] = (
    ConstantSpec("M_e", 9.1093837015e-31, "kg", "electron mass"),
    ConstantSpec("M_p", 1.67262192369e-27, "kg", "proton mass"),
    ConstantSpec("h", 6.62607015e-34, "J s", "Planck constant"),
    ConstantSpec("hbar_si", 6.62607015e-34 / (2.0 * math.pi), "J s", "reduced Planck constant"),
    ConstantSpec("e_charge", 1.602176634e-19, "C", "elementary charge (SI)"),
    ConstantSpec("eps0", 8.8541878128e-12, "F/m", "vacuum permittivity (SI)"),
    ConstantSpec("G", 6.67430e-11, "m^3 kg^-1 s^-2", "gravitational constant"),
    ConstantSpec("N_A", 6.02214076e23, "1/mol", "Avogadro number"),
    ConstantSpec("c", 299792458.0, "m/s", "speed of light"),
    ConstantSpec("M_E", 5.972e24, "kg", "Earth mass"),
    ConstantSpec("R_E", 6.371e6, "m", "Earth mean radius"),
    ConstantSpec("R_O", 1.496e11, "m", "Earth orbital radius"),
    ConstantSpec("tau_E", 3.156e7, "s", "sidereal year"),
    ConstantSpec("nu_H", 6.57e15, "Hz", "hydrogen frequency"),
    ConstantSpec("hbar_natural", 1.0546e-34, "N^-1 m^4", "hbar in natural units"),
)

CONSTANT_NAMES: tuple[str, ...] = tuple(spec.name for spec in CONSTANTS)

_HBAR_REL_TOL = 1e-12


class ConstantsTable(BaseModel):
    """Immutable table of constants with per-key provenance."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    M_e: PositiveFloat
    M_p: PositiveFloat
    h: PositiveFloat
    hbar_si: PositiveFloat
    e_charge: PositiveFloat
    eps0: PositiveFloat
    G: PositiveFloat
    N_A: PositiveFloat
    c: PositiveFloat
    M_E: PositiveFloat
    R_E: PositiveFloat
    R_O: PositiveFloat
    tau_E: PositiveFloat
    nu_H: PositiveFloat
    hbar_natural: PositiveFloat
    provenance: dict[str, Provenance] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_hbar(self) -> ConstantsTable:
        expected = self.h / (2.0 * math.pi)
        if abs(self.hbar_si - expected) > _HBAR_REL_TOL * expected:
            raise ValueError(
                f"hbar_si={self.hbar_si!r} is inconsistent with h/2pi={expected!r}"
            )
        return self

    @property
    def eV(self) -> float:
        """One electronvolt in joules."""
        return self.e_charge

    def values(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in CONSTANT_NAMES}

    def overridden(self) -> list[str]:
        return [name for name in CONSTANT_NAMES if self.provenance.get(name) == "overridden"]


def default_values() -> dict[str, float]:
    return {spec.name: spec.default for spec in CONSTANTS}
