"""Dynamic charge of a radially oscillating proton (monopole mode only)."""

from __future__ import annotations

import csv
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import TextIO

import numpy as np
from loguru import logger
from scipy.special import expit

from core.errors import DomainError
from core.numerics.roots import find_root

FM = 1e-15

# First-order density is trusted below this amplitude.
FIRST_ORDER_LIMIT = 0.1


@dataclass(frozen=True)
class ProtonOscillation:
    R_p: float
    d: float
    omega: float
    M_p: float
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not (self.R_p > 0.0 and self.M_p > 0.0):
            raise DomainError(
                f"R_p and M_p must be positive, got R_p={self.R_p!r}, M_p={self.M_p!r}"
            )
        if not 0.0 < self.d < self.R_p:
            raise DomainError(f"Amplitude d must satisfy 0 < d < R_p, got d={self.d!r}")
        if not self.omega > 0.0:
            raise DomainError(f"omega must be positive, got {self.omega!r}")
        if not self.first_order_valid:
            logger.warning(
                f"Oscillation amplitude x={self.x:.4g} exceeds {FIRST_ORDER_LIMIT}; "
                "first-order density is outside its validity range"
            )

    @classmethod
    def from_ratio(
        cls,
        R_p: float,
        d_over_Rp: float,
        nu: float,
        M_p: float,
        beta: float = 1.0,
    ) -> ProtonOscillation:
        return cls(R_p=R_p, d=d_over_Rp * R_p, omega=2.0 * math.pi * nu, M_p=M_p, beta=beta)

    @property
    def x(self) -> float:
        return 3.0 * self.d / self.R_p

    @property
    def first_order_valid(self) -> bool:
        return self.x <= FIRST_ORDER_LIMIT

    @property
    def rho0(self) -> float:
        return 3.0 * self.M_p / (4.0 * math.pi * self.R_p**3)

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega


def radius_at(p: ProtonOscillation, t: float) -> float:
    return p.R_p + p.d * math.sin(p.omega * t)


def density_first_order(p: ProtonOscillation, t: float) -> float:
    return p.rho0 * (1.0 - p.x * math.sin(p.omega * t))


def density_exact(p: ProtonOscillation, t: float) -> float:
    """Mass over the instantaneous volume; reference for the first-order model."""
    return 3.0 * p.M_p / (4.0 * math.pi) * radius_at(p, t) ** -3


def dynamic_charge(p: ProtonOscillation, t: float) -> float:
    """q_D(t) = beta x M_p omega^2 sin(omega t), natural units (J/m^2)."""
    return p.beta * p.x * p.M_p * p.omega**2 * math.sin(p.omega * t)


def poisson_source(p: ProtonOscillation, t: float) -> float:
    """Interior source density; the Laplacian of phi equals minus this value."""
    return p.beta * p.x * p.rho0 * p.omega**2 * math.sin(p.omega * t)


def source_profile(p: ProtonOscillation, t: float) -> Callable[[float], float]:
    """Radial source: uniform inside R_p, zero outside."""
    value = poisson_source(p, t)

    def source(r: float) -> float:
        return value if r < p.R_p else 0.0

    return source


def exterior_field(
    p: ProtonOscillation,
    r: float,
    t: float,
    calibration: float = 1.0,
) -> float:
    """q_D(t) / r^2 outside the proton. ``calibration`` scales the 1/r^2 constant."""
    if r < p.R_p:
        raise DomainError(f"exterior_field is defined for r >= R_p ({p.R_p!r}), got r={r!r}")
    return calibration * dynamic_charge(p, t) / (r * r)


def field_falloff_exponent(
    p: ProtonOscillation,
    t: float,
    r_max_over_Rp: float = 100.0,
    samples: int = 100,
) -> float:
    """Least-squares slope of log|E| against log r over [R_p, r_max]."""
    radii = np.geomspace(p.R_p, r_max_over_Rp * p.R_p, samples)
    field = np.array([abs(exterior_field(p, r, t)) for r in radii])
    if not np.all(field > 0.0):
        raise DomainError(f"Field vanishes at t={t!r}; choose a phase with sin(omega t) != 0")
    slope, _ = np.polyfit(np.log(radii), np.log(field), 1)
    return float(slope)


def momentum_density(p: ProtonOscillation, r: float, t: float) -> float:
    """Radial momentum density implied by mass conservation inside the proton."""
    return p.rho0 * p.x * p.omega * math.cos(p.omega * t) * r / 3.0


MomentumDensity = Callable[[ProtonOscillation, float, float], float]


def density_rate(p: ProtonOscillation, t: float) -> float:
    """d(rho)/dt of the first-order density."""
    return -p.rho0 * p.x * p.omega * math.cos(p.omega * t)


def continuity_residual(
    p: ProtonOscillation,
    t: float,
    n_points: int = 200,
    momentum: MomentumDensity = momentum_density,
) -> float:
    """Largest |div p + d(rho)/dt| over the cells of a radial grid, relative to rho0 x omega.

    The face fluxes are r^2 ``momentum(p, r, t)``; the divergence is their
    finite-volume difference per cell.
    """
    if n_points < 2:
        raise ValueError(f"continuity_residual needs at least 2 points, got {n_points}")
    radii = np.linspace(0.0, p.R_p, n_points)
    flux = np.array([r * r * momentum(p, float(r), t) for r in radii])

    volumes = (radii[1:] ** 3 - radii[:-1] ** 3) / 3.0
    divergence = np.diff(flux) / volumes
    residual = np.abs(divergence + density_rate(p, t))
    scale = p.rho0 * p.x * p.omega
    return float(residual.max() / scale)


def time_series(
    p: ProtonOscillation,
    r_probe: float,
    samples: int,
    periods: float = 1.0,
) -> list[tuple[float, float, float]]:
    """Rows (t, q_D, E at r_probe) sampled uniformly, both ends included."""
    if samples < 2:
        raise ValueError(f"time_series needs at least 2 samples, got {samples}")
    duration = periods * p.period
    rows = []
    for k in range(samples):
        t = duration * k / (samples - 1)
        rows.append((t, dynamic_charge(p, t), exterior_field(p, r_probe, t)))
    return rows


def write_time_series_csv(
    rows: list[tuple[float, float, float]],
    out: TextIO,
    sig_digits: int = 17,
) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t_s", "q_D", "E_at_r"])
    for row in rows:
        writer.writerow([f"{v:.{sig_digits}g}" for v in row])


@dataclass(frozen=True)
class WoodsSaxonProfile:
    """Nuclear density 1/(1 + exp((r - r_half)/skin)); radii in fm."""

    r_half: float = 1.07
    skin: float = 0.55
    rho0: float = 1.0

    def __post_init__(self) -> None:
        if not (self.r_half > 0.0 and self.skin > 0.0 and self.rho0 > 0.0):
            raise DomainError(
                f"Woods-Saxon parameters must be positive, got r_half={self.r_half!r}, "
                f"skin={self.skin!r}, rho0={self.rho0!r}"
            )

    def density(self, r: float) -> float:
        return self.rho0 * woods_saxon_density(self, r)


def woods_saxon_density(w: WoodsSaxonProfile, r: float) -> float:
    """Relative density rho(r)/rho0."""
    if r < 0.0:
        raise DomainError(f"Radius must be non-negative, got {r!r}")
    # expit(z) = 1/(1 + exp(-z)) stays finite for very thin skins
    return float(expit(-(r - w.r_half) / w.skin))


def efold_radius(w: WoodsSaxonProfile, tol: float = 1e-9) -> float:
    """Radius (fm) where the relative density falls to 1/e."""
    target = math.exp(-1.0)
    return find_root(lambda r: woods_saxon_density(w, r) - target, 0.0, 20.0, tol=tol)


def efold_radius_closed_form(w: WoodsSaxonProfile) -> float:
    return w.r_half + w.skin * math.log(math.e - 1.0)
