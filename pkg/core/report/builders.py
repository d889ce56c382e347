"""Assemble report payloads from the physics modules."""

from __future__ import annotations

import math

import numpy as np
from loguru import logger

from core.config import FROM_WOODS_SAXON, WoodsSaxonConfig
from core.constants.registry import CONSTANTS, ConstantsTable
from core.numerics.poisson import RadialGrid, RadialSolution, solve_radial_poisson
from core.physics.gravity import (
    GravityScenario,
    freq_ratio_bounds,
    gravity_band,
    gravity_flux,
    solar_field,
    solar_flux_ratio,
)
from core.physics.hydrogen import (
    HydrogenModel,
    density_amplitude,
    derive_eta_coupling,
    electron_energy,
    electron_energy_quadrature,
    hbar_from_radius,
    oscillation_amplitude,
    radiation_energy_closed_form,
    radiation_energy_quadrature,
    state_velocity,
)
from core.physics.oscillator import (
    FM,
    ProtonOscillation,
    WoodsSaxonProfile,
    dynamic_charge,
    efold_radius,
    exterior_field,
    source_profile,
    time_series,
)
from core.report.schema import (
    ConstantEntry,
    ConstantsReport,
    GravityReport,
    GridResult,
    HydrogenReport,
    OscillatorReport,
    PoissonReport,
    TermCheck,
    TimeSample,
    UnitsCheckReport,
)
from core.units.checker import EquationSpec
from core.units.parser import parse_unit


def resolve_proton_radius_fm(
    value: float | str,
    woods_saxon: WoodsSaxonConfig | None = None,
    tol: float = 1e-9,
) -> float:
    """Proton radius in fm; ``from-woods-saxon`` resolves the e-fold radius."""
    if value == FROM_WOODS_SAXON:
        ws = woods_saxon or WoodsSaxonConfig()
        radius = efold_radius(WoodsSaxonProfile(r_half=ws.r_half_fm, skin=ws.skin_fm), tol=tol)
        logger.info(f"R_p resolved from the Woods-Saxon profile: {radius:.6g} fm")
        return radius
    return float(value)


def build_constants_report(constants: ConstantsTable) -> ConstantsReport:
    return ConstantsReport(
        constants=[
            ConstantEntry(
                name=spec.name,
                value=getattr(constants, spec.name),
                unit=spec.unit,
                provenance=constants.provenance.get(spec.name, "default"),
            )
            for spec in CONSTANTS
        ]
    )


def build_hydrogen_report(
    constants: ConstantsTable,
    n: int,
    R_p_fm: float,
    *,
    R_H: float | None = None,
    k1: float | None = None,
    quadrature: bool = False,
    rel_tol: float = 1e-10,
    rp_window_fm: tuple[float, float] = (0.5, 3.0),
) -> HydrogenReport:
    model = HydrogenModel.from_constants(constants, R_p=R_p_fm * FM, n=n, R_H=R_H, k1=k1)
    ledger = electron_energy(model)
    coupling = derive_eta_coupling(model)
    estimate = hbar_from_radius(
        model, model.R_p, reference=constants.hbar_natural, window_fm=rp_window_fm
    )

    extra: dict[str, float] = {}
    if quadrature:
        electron = electron_energy_quadrature(model, rel_tol=rel_tol)
        closed = radiation_energy_closed_form(model, coupling.eta)
        numeric = radiation_energy_quadrature(model, coupling.eta, rel_tol=rel_tol)
        extra = {
            "W_el_quadrature_eV": electron.value / model.eV,
            "W_el_quadrature_ratio": electron.ratio,
            "W_Rad_quadrature_eV": numeric / model.eV,
            "W_Rad_quadrature_rel_dev": (numeric - closed) / closed,
        }

    return HydrogenReport(
        n=model.n,
        u_n=state_velocity(model),
        rho0=density_amplitude(model),
        x=oscillation_amplitude(model),
        W_el_eV=ledger.W_el_eV,
        W_free_eV=ledger.W_free_eV,
        Delta_W_eV=ledger.Delta_W_eV,
        W_Rad_eV=ledger.W_Rad_eV,
        eta_coupling=coupling.eta,
        eta_times_Rp=coupling.eta_times_Rp,
        four_pi_over_eta=estimate.four_pi_over_eta,
        hbar_reference=estimate.reference,
        rel_dev=estimate.rel_dev,
        R_p_fm=R_p_fm,
        R_p_in_window=estimate.in_window,
        R_H=model.R_H,
        **extra,
    )


def build_gravity_report(
    constants: ConstantsTable,
    *,
    k_u: float = 1.0,
    mass: float | None = None,
    nu_E: float | None = None,
    decade_rounding: bool = True,
    comparator_W_per_m2: float = 300.0,
) -> GravityReport:
    scenario = GravityScenario.from_constants(constants, k_u=k_u)
    bounds = freq_ratio_bounds(
        constants,
        M=mass if mass is not None else constants.M_p,
        k_u=k_u,
        decade_rounding=decade_rounding,
    )
    band = gravity_band(nu_E if nu_E is not None else constants.nu_H, bounds.pair)
    field = solar_field(scenario)
    flux = gravity_flux(scenario)
    return GravityReport(
        eta_lo=bounds.eta_lo,
        eta_hi=bounds.eta_hi,
        band_lo_Hz=band.lo,
        band_hi_Hz=band.hi,
        rho_E=field.rho_E,
        a_C=field.a_C,
        G_S=field.G_S,
        phi_G=flux.phi_G,
        J_G_mW_per_m2=flux.J_G_mW_per_m2,
        solar_flux_ratio=solar_flux_ratio(flux.J_G, comparator_W_per_m2),
    )


def build_units_report(spec: EquationSpec) -> UnitsCheckReport:
    report = spec.check()
    terms = []
    for i, ((label, expr), dim) in enumerate(zip(spec.terms, report.terms)):
        off_by = report.mismatch.get(i)
        terms.append(
            TermCheck(
                label=label,
                expression=expr,
                dimension=dim.render(),
                matches_target=off_by is None,
                off_by=off_by.render() if off_by is not None else None,
            )
        )
    return UnitsCheckReport(
        equation_id=spec.id,
        title=spec.title,
        target=parse_unit(spec.target).render(),
        terms=terms,
        verdict=report.verdict,
        expected="consistent" if spec.expect_consistent else "inconsistent",
        matches_expectation=spec.matches_expectation(report),
    )


def build_oscillator_report(
    constants: ConstantsTable,
    *,
    R_p_fm: float,
    d_over_Rp: float,
    nu: float | None = None,
    beta: float = 1.0,
    samples: int = 64,
    probe_r_over_Rp: float = 2.0,
) -> OscillatorReport:
    frequency = nu if nu is not None else constants.nu_H
    p = ProtonOscillation.from_ratio(
        R_p=R_p_fm * FM, d_over_Rp=d_over_Rp, nu=frequency, M_p=constants.M_p, beta=beta
    )
    r_probe = probe_r_over_Rp * p.R_p
    rows = time_series(p, r_probe, samples)
    return OscillatorReport(
        R_p=p.R_p,
        d=p.d,
        x=p.x,
        nu=frequency,
        beta=p.beta,
        r_probe=r_probe,
        samples=[TimeSample(t_s=t, q_D=q, E_at_r=e) for t, q, e in rows],
    )


def _exterior_window(solution: RadialSolution, R_p: float) -> np.ndarray:
    r = solution.grid.r
    return (r >= 2.0 * R_p) & (r <= 0.9 * solution.grid.r_max)


def exterior_gauss_error(solution: RadialSolution, p: ProtonOscillation, t: float) -> float:
    """Largest |4 pi E r^2 / q_D - 1| over the exterior window."""
    mask = _exterior_window(solution, p.R_p)
    r = solution.grid.r[mask]
    gauss = 4.0 * math.pi * solution.E[mask] * r * r / dynamic_charge(p, t)
    return float(np.max(np.abs(gauss - 1.0)))


def solve_dynamic_field(
    p: ProtonOscillation,
    t: float,
    grid_points: int,
    extent: float = 8.0,
) -> RadialSolution:
    grid = RadialGrid(r_min=0.0, r_max=extent * p.R_p, n_points=grid_points)
    return solve_radial_poisson(
        source_profile(p, t),
        grid,
        total_charge=dynamic_charge(p, t),
        breakpoints=(p.R_p,),
        source_radius=p.R_p,
    )


def build_poisson_report(
    p: ProtonOscillation,
    *,
    grid_points: int = 1024,
    extent: float = 8.0,
) -> tuple[PoissonReport, RadialSolution]:
    """Finite-volume solve of the dynamic source against the closed-form exterior field.

    Runs the grid at N/4, N/2 and N points; the convergence ratio is the drop in
    the exterior Gauss-law error from N/2 to N.
    """
    t = p.period / 4.0
    sizes = (grid_points // 4, grid_points // 2, grid_points)
    for size in sizes:
        RadialGrid(r_min=0.0, r_max=extent * p.R_p, n_points=size).require_resolved(p.R_p)
    solutions = [solve_dynamic_field(p, t, size, extent) for size in sizes]
    errors = [exterior_gauss_error(s, p, t) for s in solutions]
    finest = solutions[-1]

    mask = _exterior_window(finest, p.R_p)
    r = finest.grid.r[mask]
    E = finest.E[mask]
    slope, _ = np.polyfit(np.log(r), np.log(np.abs(E)), 1)
    flux = E * r * r
    gauss_spread = float((flux.max() - flux.min()) / abs(flux.mean()))
    closed = np.array([exterior_field(p, radius, t) for radius in r])
    calibration = float(np.median(closed / E))
    logger.debug(f"Poisson oracle errors by grid {sizes}: {errors}")

    report = PoissonReport(
        grid_points=grid_points,
        R_p=p.R_p,
        r_max=finest.grid.r_max,
        t=t,
        q_D=dynamic_charge(p, t),
        slope=float(slope),
        gauss_spread=gauss_spread,
        calibration_constant=calibration,
        convergence_ratio=errors[1] / errors[2],
        convergence_ratio_coarse=errors[0] / errors[1],
        grids=[GridResult(grid_points=s, max_rel_error=e) for s, e in zip(sizes, errors)],
    )
    return report, finest
