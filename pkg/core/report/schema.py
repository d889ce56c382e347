"""Report payloads emitted by the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

FindingLevel = Literal["PASS", "WARN", "FAIL"]


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    def rows(self) -> list[tuple[str, object]]:
        """Flat (field, value) rows for the csv and text emitters."""
        return list(self.model_dump().items())


class HydrogenReport(Report):
    n: int
    u_n: float
    rho0: float
    x: float
    W_el_eV: float
    W_free_eV: float
    Delta_W_eV: float
    W_Rad_eV: float
    eta_coupling: float
    eta_times_Rp: float
    four_pi_over_eta: float
    hbar_reference: float
    rel_dev: float
    R_p_fm: float
    R_p_in_window: bool
    R_H: float
    # present only with --quadrature
    W_el_quadrature_eV: float | None = None
    W_el_quadrature_ratio: float | None = None
    W_Rad_quadrature_eV: float | None = None
    W_Rad_quadrature_rel_dev: float | None = None

    def rows(self) -> list[tuple[str, object]]:
        return [(k, v) for k, v in self.model_dump().items() if v is not None]


class GravityReport(Report):
    eta_lo: float
    eta_hi: float
    band_lo_Hz: float
    band_hi_Hz: float
    rho_E: float
    a_C: float
    G_S: float
    phi_G: float
    J_G_mW_per_m2: float
    # text output only; the json payload keeps the nine fields above
    solar_flux_ratio: float | None = Field(default=None, exclude=True)

    def rows(self) -> list[tuple[str, object]]:
        rows = super().rows()
        if self.solar_flux_ratio is not None:
            rows.append(("J_G / solar flux", self.solar_flux_ratio))
        return rows


class ConstantEntry(BaseModel):
    name: str
    value: float
    unit: str
    provenance: str


class ConstantsReport(Report):
    constants: list[ConstantEntry]

    def rows(self) -> list[tuple[str, object]]:
        return [(c.name, c.value) for c in self.constants]


class TermCheck(BaseModel):
    label: str
    expression: str
    dimension: str
    matches_target: bool
    off_by: str | None = None


class UnitsCheckReport(Report):
    equation_id: str
    title: str
    target: str
    terms: list[TermCheck]
    verdict: Literal["consistent", "inconsistent"]
    expected: Literal["consistent", "inconsistent"]
    matches_expectation: bool

    def rows(self) -> list[tuple[str, object]]:
        rows: list[tuple[str, object]] = [("target", self.target)]
        for term in self.terms:
            status = "ok" if term.matches_target else f"off by {term.off_by}"
            rows.append((term.label, f"{term.dimension} ({status})"))
        rows.append(("verdict", self.verdict))
        rows.append(("expected", self.expected))
        return rows


class GridResult(BaseModel):
    grid_points: int
    max_rel_error: float


class PoissonReport(Report):
    grid_points: int
    R_p: float
    r_max: float
    t: float
    q_D: float
    slope: float
    gauss_spread: float
    calibration_constant: float
    convergence_ratio: float
    convergence_ratio_coarse: float
    grids: list[GridResult]

    def rows(self) -> list[tuple[str, object]]:
        rows = [(k, v) for k, v in self.model_dump(exclude={"grids"}).items()]
        rows.extend((f"max_rel_error@{g.grid_points}", g.max_rel_error) for g in self.grids)
        return rows


class TimeSample(BaseModel):
    t_s: float
    q_D: float
    E_at_r: float


class OscillatorReport(Report):
    R_p: float
    d: float
    x: float
    nu: float
    beta: float
    r_probe: float
    samples: list[TimeSample]

    def rows(self) -> list[tuple[str, object]]:
        return [(k, v) for k, v in self.model_dump(exclude={"samples"}).items()]


class Finding(BaseModel):
    level: FindingLevel
    check: str
    message: str


class VerifyReport(Report):
    findings: list[Finding] = Field(default_factory=list)
    summary: dict[str, int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.summary.get("FAIL", 0) == 0

    def rows(self) -> list[tuple[str, object]]:
        return [(f.check, f"{f.level}: {f.message}") for f in self.findings]
