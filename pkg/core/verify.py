"""Acceptance ledger: every headline number checked against its expected window."""

from __future__ import annotations

import math
import time

import numpy as np
from loguru import logger

from core.config import Config
from core.constants.registry import ConstantsTable
from core.physics.fields import hbar_from_eta, radiation_density, radiation_density_eta
from core.physics.gravity import gravity_band
from core.physics.hydrogen import (
    HydrogenModel,
    derive_eta_coupling,
    electron_energy,
    hbar_from_radius,
    oscillation_amplitude,
    radiation_energy_closed_form,
    radiation_energy_quadrature,
)
from core.physics.oscillator import (
    FM,
    ProtonOscillation,
    WoodsSaxonProfile,
    continuity_residual,
    efold_radius,
)
from core.report.builders import (
    build_gravity_report,
    build_hydrogen_report,
    build_poisson_report,
)
from core.report.schema import Finding, VerifyReport
from core.units.checker import EQUATIONS
from core.units.parser import parse_unit

# (R_p in fm, expected 4 pi / eta)
HBAR_ANCHORS: tuple[tuple[float, float], ...] = ((1.3, 0.92e-34), (1.4, 0.99e-34), (1.5, 1.06e-34))
ETA_RP_ANCHOR = 1.78e20
EFOLD_ANCHOR_FM = 1.368
W_EL_ANCHOR_EV = 13.6
W_FREE_ANCHOR_EV = 27.2
X_ANCHOR = 1.380e-5
J_G_WINDOW_MW = (55.0, 85.0)
RHO_E_ANCHOR = 5.51e3
ETA_LO_WINDOW = (5e-15, 2e-14)
ETA_HI_WINDOW = (5e-12, 2e-11)
GRAVITY_BAND_TARGET_HZ = (10.0, 1e4)


def _finding(level: str, check: str, message: str) -> dict[str, str]:
    return {"level": level, "check": check, "message": message}


def _within(value: float, anchor: float, rel: float) -> bool:
    return abs(value - anchor) <= rel * abs(anchor)


def _check(ok: bool, check: str, message: str) -> dict[str, str]:
    return _finding("PASS" if ok else "FAIL", check, message)


def _hbar_findings(constants: ConstantsTable) -> list[dict[str, str]]:
    findings = []
    for r_fm, anchor in HBAR_ANCHORS:
        model = HydrogenModel.from_constants(constants, R_p=r_fm * FM)
        start = time.perf_counter()
        estimate = hbar_from_radius(model, model.R_p)
        elapsed_ms = (time.perf_counter() - start) * 1e3
        findings.append(_check(
            _within(estimate.four_pi_over_eta, anchor, 0.01),
            f"hbar@{r_fm}fm",
            f"4pi/eta = {estimate.four_pi_over_eta:.4g} (expected {anchor:.3g} +/- 1%)",
        ))
        if elapsed_ms >= 1.0:
            findings.append(_finding(
                "WARN", f"hbar_runtime@{r_fm}fm", f"took {elapsed_ms:.3g} ms (limit 1 ms)"
            ))
    product = derive_eta_coupling(HydrogenModel.from_constants(constants, R_p=1.4 * FM))
    findings.append(_check(
        _within(product.eta_times_Rp, ETA_RP_ANCHOR, 0.005),
        "eta_times_Rp",
        f"eta R_p = {product.eta_times_Rp:.4g} (expected {ETA_RP_ANCHOR:.3g} +/- 0.5%)",
    ))
    return findings


def _efold_findings(config: Config) -> list[dict[str, str]]:
    ws = config.oscillator.woods_saxon
    radius = efold_radius(WoodsSaxonProfile(r_half=ws.r_half_fm, skin=ws.skin_fm))
    ok = abs(radius - EFOLD_ANCHOR_FM) <= 1e-3 and 1.3 <= radius <= 1.4
    message = f"{radius:.6g} fm (expected 1.368 +/- 0.001, in [1.3, 1.4])"
    return [_check(ok, "efold_radius", message)]


def _ledger_findings(constants: ConstantsTable) -> list[dict[str, str]]:
    model = HydrogenModel.from_constants(constants, R_p=1.4 * FM)
    ledger = electron_energy(model)
    h_nu_eV = constants.h * constants.nu_H / constants.eV
    identities = ledger.Delta_W == ledger.W_free - ledger.W_el and ledger.W_Rad == ledger.Delta_W
    return [
        _check(
            _within(ledger.W_el_eV, W_EL_ANCHOR_EV, 0.005),
            "W_el",
            f"{ledger.W_el_eV:.4g} eV (expected 13.6 +/- 0.5%)",
        ),
        _check(
            _within(ledger.W_free_eV, W_FREE_ANCHOR_EV, 0.005)
            and _within(ledger.W_free_eV, h_nu_eV, 0.005),
            "W_free",
            f"{ledger.W_free_eV:.4g} eV, h nu_H = {h_nu_eV:.4g} eV (expected 27.2 +/- 0.5%)",
        ),
        _check(identities, "ledger_identities", "Delta_W = W_free - W_el and W_Rad = Delta_W"),
    ]


def _amplitude_findings(constants: ConstantsTable) -> list[dict[str, str]]:
    xs = [
        oscillation_amplitude(HydrogenModel.from_constants(constants, R_p=1.4 * FM, n=n))
        for n in range(1, 11)
    ]
    monotone = all(a > b > 0.0 for a, b in zip(xs, xs[1:]))
    return [
        _check(
            _within(xs[0], X_ANCHOR, 0.001) and xs[0] / 3.0 < 1e-5,
            "amplitude_x",
            f"x(1) = {xs[0]:.5g}, d/R_p = {xs[0] / 3.0:.3g} "
            "(expected 1.380e-5 +/- 0.1%, d/R_p < 1e-5)",
        ),
        _check(monotone, "amplitude_monotone", "x(n) strictly decreasing over n = 1..10"),
    ]


def _gravity_findings(constants: ConstantsTable, config: Config) -> list[dict[str, str]]:
    g = config.gravity
    report = build_gravity_report(
        constants,
        k_u=g.k_u,
        decade_rounding=g.decade_rounding,
        comparator_W_per_m2=g.solar_comparator_W_per_m2,
    )
    lo, hi = J_G_WINDOW_MW
    band = gravity_band(constants.nu_H, (report.eta_lo, report.eta_hi))
    target_lo, target_hi = GRAVITY_BAND_TARGET_HZ
    return [
        _check(
            lo <= report.J_G_mW_per_m2 <= hi,
            "J_G",
            f"{report.J_G_mW_per_m2:.4g} mW/m^2 (expected [{lo:g}, {hi:g}])",
        ),
        _check(
            _within(report.rho_E, RHO_E_ANCHOR, 0.01),
            "rho_E",
            f"{report.rho_E:.4g} kg/m^3 (expected 5.51e3 +/- 1%)",
        ),
        _check(
            ETA_LO_WINDOW[0] <= report.eta_lo <= ETA_LO_WINDOW[1],
            "eta_lo",
            f"{report.eta_lo:.4g} (expected [{ETA_LO_WINDOW[0]:g}, {ETA_LO_WINDOW[1]:g}])",
        ),
        _check(
            ETA_HI_WINDOW[0] <= report.eta_hi <= ETA_HI_WINDOW[1],
            "eta_hi",
            f"{report.eta_hi:.4g} (expected [{ETA_HI_WINDOW[0]:g}, {ETA_HI_WINDOW[1]:g}])",
        ),
        _check(
            band.overlaps(target_lo, target_hi),
            "gravity_band",
            f"[{band.lo:.4g}, {band.hi:.4g}] Hz overlaps [10 Hz, 10 kHz]",
        ),
    ]


def _units_findings() -> list[dict[str, str]]:
    findings = []
    for spec in EQUATIONS:
        report = spec.check()
        ok = spec.matches_expectation(report)
        expected = "consistent" if spec.expect_consistent else "inconsistent"
        message = f"{report.verdict} (expected {expected})"
        if spec.id == "lorentz-naive":
            off_by = report.mismatch.get(1)
            ok = ok and off_by == parse_unit("N/m^4") and 0 not in report.mismatch
            rendered = off_by.render() if off_by is not None else "nothing"
            message += f", magnetic term off by {rendered}"
        findings.append(_check(ok, f"units:{spec.id}", message))
    return findings


def _oracle_findings(constants: ConstantsTable, config: Config) -> list[dict[str, str]]:
    findings = []
    rel_tol = config.numerics.rel_tol

    model = HydrogenModel.from_constants(constants, R_p=1.4 * FM)
    eta = derive_eta_coupling(model).eta
    closed = radiation_energy_closed_form(model, eta)
    numeric = radiation_energy_quadrature(model, eta, rel_tol=rel_tol)
    deviation = abs(numeric - closed) / closed
    truncation = model.R_p / model.R_H
    findings.append(_check(
        deviation <= 1e-3 + truncation,
        "oracle:W_Rad_quadrature",
        f"relative deviation {deviation:.3g} (limit 0.1% + R_p/R_H = {truncation:.3g})",
    ))

    p = ProtonOscillation.from_ratio(
        R_p=1.4 * FM, d_over_Rp=config.oscillator.d_over_Rp, nu=constants.nu_H, M_p=constants.M_p
    )
    poisson, _ = build_poisson_report(
        p, grid_points=config.numerics.poisson_points, extent=config.numerics.poisson_extent
    )
    findings.append(_check(
        abs(poisson.slope + 2.0) <= 0.01,
        "oracle:poisson_slope",
        f"slope {poisson.slope:.5f} (expected -2.00 +/- 0.01)",
    ))
    findings.append(_check(
        abs(poisson.convergence_ratio - 4.0) <= 0.5,
        "oracle:poisson_convergence",
        f"error ratio {poisson.convergence_ratio:.3f} between "
        f"{poisson.grids[1].grid_points} and {poisson.grids[2].grid_points} points "
        "(expected 4 +/- 0.5)",
    ))
    findings.append(_finding(
        "PASS",
        "oracle:poisson_calibration",
        f"closed-form / numerical exterior field = {poisson.calibration_constant:.6g} "
        f"(4 pi = {4.0 * math.pi:.6g})",
    ))

    residual = continuity_residual(p, t=0.0, n_points=200)
    findings.append(_check(
        residual <= 1e-8,
        "oracle:continuity",
        f"max relative residual {residual:.3g} on 200 points (limit 1e-8)",
    ))

    rng = np.random.default_rng(20240101)
    worst = 0.0
    hbar_eta = hbar_from_eta(eta)
    for E in rng.uniform(0.0, 1e30, size=1000):
        lhs = radiation_density_eta(float(E), 0.0, eta)
        rhs = radiation_density(float(E), 0.0, hbar_eta)
        if lhs > 0.0:
            worst = max(worst, abs(lhs - rhs) / lhs)
    findings.append(_check(
        worst <= 1e-14,
        "oracle:radiation_identity",
        f"max relative difference {worst:.3g} over 1000 samples (limit 1e-14)",
    ))
    return findings


def _determinism_findings(constants: ConstantsTable) -> list[dict[str, str]]:
    first = build_hydrogen_report(constants, 1, 1.4).model_dump_json()
    second = build_hydrogen_report(constants, 1, 1.4).model_dump_json()
    return [_check(first == second, "determinism", "repeated hydrogen reports are bit-identical")]


def collect_acceptance_findings(constants: ConstantsTable, config: Config) -> list[dict[str, str]]:
    findings: list[dict[str, str]] = []
    findings.extend(_hbar_findings(constants))
    findings.extend(_efold_findings(config))
    findings.extend(_ledger_findings(constants))
    findings.extend(_amplitude_findings(constants))
    findings.extend(_gravity_findings(constants, config))
    findings.extend(_units_findings())
    findings.extend(_oracle_findings(constants, config))
    findings.extend(_determinism_findings(constants))
    return findings


def summarize_levels(findings: list[dict[str, str]]) -> dict[str, int]:
    return {
        "PASS": sum(1 for finding in findings if finding["level"] == "PASS"),
        "WARN": sum(1 for finding in findings if finding["level"] == "WARN"),
        "FAIL": sum(1 for finding in findings if finding["level"] == "FAIL"),
    }


def run_acceptance(constants: ConstantsTable, config: Config) -> VerifyReport:
    findings = collect_acceptance_findings(constants, config)
    summary = summarize_levels(findings)
    summary_line = (
        "Acceptance summary: "
        f"PASS={summary['PASS']} WARN={summary['WARN']} FAIL={summary['FAIL']}"
    )
    if summary["FAIL"] > 0:
        logger.error(summary_line)
    elif summary["WARN"] > 0:
        logger.warning(summary_line)
    else:
        logger.info(summary_line)
    for finding in findings:
        if finding["level"] == "FAIL":
            logger.error(f"[verify:{finding['check']}] {finding['message']}")
    return VerifyReport(findings=[Finding(**f) for f in findings], summary=summary)


def main(argv: list[str] | None = None) -> int:
    """Entry point for ``dyncharge-verify``: the ``verify`` subcommand on its own."""
    import sys

    from core.main import main as cli_main

    args = list(sys.argv[1:] if argv is None else argv)
    return cli_main(["verify", *args])
