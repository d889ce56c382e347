"""Dynamic-gravity frequency ratio, solar field and energy flux at Earth's orbit."""

from __future__ import annotations

import math
from dataclasses import dataclass

from loguru import logger

from core.constants.registry import ConstantsTable
from core.errors import DomainError

SOLAR_FLUX_W_PER_M2 = 300.0


@dataclass(frozen=True)
class GravityScenario:
    M_E: float
    R_E: float
    R_O: float
    tau_E: float
    N_A: float
    c: float
    hbar_natural: float
    k_u: float = 1.0

    def __post_init__(self) -> None:
        for name in ("M_E", "R_E", "R_O", "tau_E", "N_A", "c", "k_u"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
        # hbar_natural = 0 is the classical limit: no flux
        if not (math.isfinite(self.hbar_natural) and self.hbar_natural >= 0.0):
            raise DomainError(f"hbar_natural must be non-negative, got {self.hbar_natural!r}")
        if not self.R_E < self.R_O:
            raise DomainError(
                f"Earth radius must be below the orbital radius, "
                f"got R_E={self.R_E!r}, R_O={self.R_O!r}"
            )

    @classmethod
    def from_constants(cls, constants: ConstantsTable, k_u: float = 1.0) -> GravityScenario:
        return cls(
            M_E=constants.M_E,
            R_E=constants.R_E,
            R_O=constants.R_O,
            tau_E=constants.tau_E,
            N_A=constants.N_A,
            c=constants.c,
            hbar_natural=constants.hbar_natural,
            k_u=k_u,
        )

    @property
    def omega_orbital(self) -> float:
        return 2.0 * math.pi / self.tau_E


@dataclass(frozen=True)
class FrequencyBand:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not 0.0 < self.lo <= self.hi:
            raise DomainError(
                f"FrequencyBand needs 0 < lo <= hi, got lo={self.lo!r}, hi={self.hi!r}"
            )

    def overlaps(self, lo: float, hi: float) -> bool:
        return self.lo <= hi and lo <= self.hi


@dataclass(frozen=True)
class FreqRatioBounds:
    eta_lo: float
    eta_hi: float
    eta_hi_raw: float
    eps0_G: float

    @property
    def pair(self) -> tuple[float, float]:
        return (self.eta_lo, self.eta_hi)


def freq_ratio_bounds(
    constants: ConstantsTable,
    M: float,
    k_u: float = 1.0,
    decade_rounding: bool = True,
) -> FreqRatioBounds:
    """Bounds on the gravity-to-electromagnetic frequency ratio.

    The upper bound is the square root of eps0 G; with ``decade_rounding`` that
    product is first rounded down to its power of ten. The lower bound is
    sqrt(k_u 4 pi eps0 G M / e) for a source of mass ``M``.
    """
    if not M > 0.0:
        raise DomainError(f"Mass must be positive, got {M!r}")
    if not k_u > 0.0:
        raise DomainError(f"k_u must be positive, got {k_u!r}")
    eps0_G = constants.eps0 * constants.G
    eta_hi_raw = math.sqrt(eps0_G)
    eta_hi = math.sqrt(10.0 ** math.floor(math.log10(eps0_G))) if decade_rounding else eta_hi_raw
    eta_lo = math.sqrt(k_u * 4.0 * math.pi * eps0_G * M / constants.e_charge)
    logger.debug(
        f"eps0*G={eps0_G:.6g}: eta_hi={eta_hi:.6g} "
        f"(unrounded {eta_hi_raw:.6g}), eta_lo={eta_lo:.6g}"
    )
    return FreqRatioBounds(eta_lo=eta_lo, eta_hi=eta_hi, eta_hi_raw=eta_hi_raw, eps0_G=eps0_G)


def gravity_band(nu_E: float, bounds: tuple[float, float]) -> FrequencyBand:
    if not nu_E > 0.0:
        raise DomainError(f"nu_E must be positive, got {nu_E!r}")
    lo, hi = bounds
    if lo > hi:
        logger.warning(f"Frequency-ratio bounds are inverted ({lo:.4g} > {hi:.4g}); sorting them")
        lo, hi = hi, lo
    return FrequencyBand(lo=lo * nu_E, hi=hi * nu_E)


@dataclass(frozen=True)
class SolarField:
    rho_E: float
    a_C: float
    G_S: float
    omega_orbital: float


def solar_field(s: GravityScenario) -> SolarField:
    """Solar gravity field as Earth's mean density times its centripetal acceleration."""
    rho_E = 3.0 * s.M_E / (4.0 * math.pi * s.R_E**3)
    a_C = s.omega_orbital**2 * s.R_O
    return SolarField(rho_E=rho_E, a_C=a_C, G_S=rho_E * a_C, omega_orbital=s.omega_orbital)


@dataclass(frozen=True)
class GravityFlux:
    phi_G: float
    J_G: float

    @property
    def J_G_mW_per_m2(self) -> float:
        return self.J_G * 1e3


def gravity_flux_from_field(G_S: float, s: GravityScenario) -> GravityFlux:
    phi_G = 0.5 * s.hbar_natural * (G_S / (4.0 * math.pi)) ** 2
    return GravityFlux(phi_G=phi_G, J_G=phi_G * s.N_A * s.c)


def gravity_flux(s: GravityScenario) -> GravityFlux:
    """Energy density (hbar/2)(G_S/4pi)^2 and its flow N_A c phi_G at Earth's orbit."""
    return gravity_flux_from_field(solar_field(s).G_S, s)


def dynamic_field_amplitude(M: float, omega: float, r: float) -> float:
    """Amplitude M omega^2 / r^2 of the dynamic gravity field of an oscillating mass."""
    if not r > 0.0:
        raise DomainError(f"Radius must be positive, got {r!r}")
    return M * omega * omega / (r * r)


def solar_flux_ratio(J_G: float, comparator: float = SOLAR_FLUX_W_PER_M2) -> float:
    if not comparator > 0.0:
        raise DomainError(f"Comparator flux must be positive, got {comparator!r}")
    return J_G / comparator
