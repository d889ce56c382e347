"""Hydrogen energy ledger and the coupling-constant route to hbar."""

from __future__ import annotations

import math
from dataclasses import dataclass

from loguru import logger

from core.constants.registry import ConstantsTable
from core.errors import DomainError
from core.numerics.quadrature import shell_integral, time_average
from core.numerics.roots import find_root
from core.physics.oscillator import FM

HBAR_REFERENCE = 1.0546e-34

# R_p must be much smaller than R_H for the radial integral to drop its 1/R_H term.
MAX_RADIUS_RATIO = 1e-3

RP_WINDOW_FM = (0.5, 3.0)


@dataclass(frozen=True)
class HydrogenModel:
    nu_H: float
    R_H: float
    R_p: float
    n: int
    M_e: float
    M_p: float
    planck: float
    eV: float
    k1: float | None = None

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"Principal quantum number must be an integer >= 1, got {self.n!r}")
        for name in ("nu_H", "R_H", "R_p", "M_e", "M_p", "planck", "eV"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
        if self.R_p / self.R_H >= MAX_RADIUS_RATIO:
            raise DomainError(
                f"R_p/R_H = {self.R_p / self.R_H:.3g} is not much smaller than 1 "
                f"(limit {MAX_RADIUS_RATIO})"
            )

    @classmethod
    def from_constants(
        cls,
        constants: ConstantsTable,
        R_p: float,
        n: int = 1,
        R_H: float | None = None,
        k1: float | None = None,
    ) -> HydrogenModel:
        return cls(
            nu_H=constants.nu_H,
            R_H=R_H if R_H is not None else default_atomic_radius(constants),
            R_p=R_p,
            n=n,
            M_e=constants.M_e,
            M_p=constants.M_p,
            planck=constants.h,
            eV=constants.eV,
            k1=k1,
        )

    @property
    def omega_H(self) -> float:
        return 2.0 * math.pi * self.nu_H

    @property
    def hbar(self) -> float:
        return self.planck / (2.0 * math.pi)

    @property
    def period(self) -> float:
        return 1.0 / self.nu_H

    @property
    def wavevector(self) -> float:
        return self.k1 if self.k1 is not None else math.pi * self.n / self.R_H


def default_atomic_radius(constants: ConstantsTable) -> float:
    """R_H fixed by h nu_H = M_e u_1^2 with u_1 = nu_H R_H."""
    return math.sqrt(constants.h / (constants.M_e * constants.nu_H))


def state_velocity(h: HydrogenModel) -> float:
    return h.omega_H * h.R_H / (2.0 * math.pi * h.n)


def density_amplitude(h: HydrogenModel) -> float:
    return h.M_e / (2.0 * math.pi * h.R_H)


def oscillation_amplitude(h: HydrogenModel) -> float:
    """x = 3d/R_p = M_e / ((2 pi)^2 M_p n)."""
    return h.M_e / ((2.0 * math.pi) ** 2 * h.M_p * h.n)


def momentum_density(h: HydrogenModel, r: float, t: float) -> float:
    """Radial momentum density of the electron wave, kinetic and field parts together."""
    _check_radius(r)
    return density_amplitude(h) * state_velocity(h) / (r * r) * math.cos(h.omega_H * t)


def intrinsic_field(h: HydrogenModel, r: float, t: float) -> float:
    """Time derivative of the momentum density."""
    _check_radius(r)
    amplitude = density_amplitude(h) * state_velocity(h) * h.omega_H
    return -amplitude / (r * r) * math.sin(h.omega_H * t)


def matched_amplitude(h: HydrogenModel) -> float:
    """Solve |electron intrinsic field| = |proton field| for x (amplitudes only)."""
    electron = density_amplitude(h) * state_velocity(h) * h.omega_H
    proton_per_x = h.M_p * h.omega_H**2
    return find_root(lambda x: proton_per_x * x - electron, 0.0, 1.0, tol=1e-22)


def energy_densities(h: HydrogenModel, r: float, t: float) -> tuple[float, float]:
    """Kinetic and field energy densities (phi_K, phi_EM) of the bound electron."""
    _check_radius(r)
    if r > h.R_H:
        raise DomainError(f"energy_densities is defined for r <= R_H ({h.R_H!r}), got r={r!r}")
    base = density_amplitude(h) * state_velocity(h) ** 2 / (r * r)
    temporal = math.cos(h.omega_H * t) ** 2
    kr = h.wavevector * r
    return (
        base * math.sin(kr) ** 2 * temporal,
        base * math.cos(kr) ** 2 * temporal,
    )


@dataclass(frozen=True)
class EnergyLedger:
    W_el: float
    W_free: float
    Delta_W: float
    W_Rad: float
    eV: float

    @property
    def W_el_eV(self) -> float:
        return self.W_el / self.eV

    @property
    def W_free_eV(self) -> float:
        return self.W_free / self.eV

    @property
    def Delta_W_eV(self) -> float:
        return self.Delta_W / self.eV

    @property
    def W_Rad_eV(self) -> float:
        return self.W_Rad / self.eV


def electron_energy(h: HydrogenModel) -> EnergyLedger:
    """Electron, free-electron, binding and radiation energies of state n."""
    if h.n != 1:
        logger.debug(f"Energy ledger evaluated at n={h.n}; the 13.6 eV anchor holds for n=1")
    u = state_velocity(h)
    W_el = 0.5 * h.M_e * u * u
    W_free = h.M_e * u * u
    Delta_W = W_free - W_el
    return EnergyLedger(W_el=W_el, W_free=W_free, Delta_W=Delta_W, W_Rad=Delta_W, eV=h.eV)


@dataclass(frozen=True)
class QuadratureCheck:
    value: float
    closed_form: float

    @property
    def ratio(self) -> float:
        return self.value / self.closed_form


def electron_energy_quadrature(h: HydrogenModel, rel_tol: float = 1e-10) -> QuadratureCheck:
    """Space-time average of phi_K + phi_EM over the atom, against the closed-form W_el."""
    base = density_amplitude(h) * state_velocity(h) ** 2
    k = h.wavevector

    def radial(r: float) -> float:
        return base / (r * r) * (math.sin(k * r) ** 2 + math.cos(k * r) ** 2)

    spatial = shell_integral(radial, 0.0, h.R_H, rel_tol=rel_tol)
    temporal = time_average(lambda t: math.cos(h.omega_H * t) ** 2, h.period, rel_tol=rel_tol)
    return QuadratureCheck(value=spatial * temporal, closed_form=electron_energy(h).W_el)


def radiation_energy_closed_form(
    h: HydrogenModel,
    eta_coupling: float,
    x: float | None = None,
) -> float:
    """W_Rad = M_p^2 omega^4 x^2 / (4 eta R_p), valid for R_p << R_H."""
    if x is None:
        x = oscillation_amplitude(h)
    return h.M_p**2 * h.omega_H**4 * x * x / (4.0 * eta_coupling * h.R_p)


def radiation_density(
    h: HydrogenModel,
    eta_coupling: float,
    r: float,
    t: float,
    x: float | None = None,
) -> float:
    """phi_Rad = E^2 / (8 pi eta) for the proton's exterior field."""
    if x is None:
        x = oscillation_amplitude(h)
    field = h.M_p * h.omega_H**2 * x / (r * r) * math.sin(h.omega_H * t)
    return field * field / (8.0 * math.pi * eta_coupling)


def radiation_energy_quadrature(
    h: HydrogenModel,
    eta_coupling: float,
    x: float | None = None,
    rel_tol: float = 1e-10,
) -> float:
    """Numerical average over one period of phi_Rad integrated from R_p to R_H."""
    if x is None:
        x = oscillation_amplitude(h)
    amplitude = (h.M_p * h.omega_H**2 * x) ** 2 / (8.0 * math.pi * eta_coupling)
    spatial = shell_integral(
        lambda r: amplitude / r**4, h.R_p, h.R_H, rel_tol=rel_tol, log_radius=True
    )
    temporal = time_average(lambda t: math.sin(h.omega_H * t) ** 2, h.period, rel_tol=rel_tol)
    return spatial * temporal


def radiation_truncation(h: HydrogenModel) -> float:
    """Relative size of the 1/R_H term dropped by the closed form."""
    return h.R_p / h.R_H


@dataclass(frozen=True)
class EtaCoupling:
    eta: float
    eta_times_Rp: float


def derive_eta_coupling(h: HydrogenModel) -> EtaCoupling:
    """eta = M_e^2 nu_H^3 / (2 h R_p)."""
    product = h.M_e**2 * h.nu_H**3 / (2.0 * h.planck)
    return EtaCoupling(eta=product / h.R_p, eta_times_Rp=product)


def eta_from_radiation_balance(h: HydrogenModel) -> float:
    """Solve W_Rad(eta) = hbar omega_H / 2 for eta, using the closed-form W_Rad."""
    return radiation_energy_closed_form(h, 1.0) / (0.5 * h.hbar * h.omega_H)


@dataclass(frozen=True)
class HbarEstimate:
    R_p: float
    four_pi_over_eta: float
    reference: float
    in_window: bool

    @property
    def rel_dev(self) -> float:
        return (self.four_pi_over_eta - self.reference) / self.reference

    @property
    def R_p_fm(self) -> float:
        return self.R_p / FM


def hbar_from_radius(
    h: HydrogenModel,
    R_p: float,
    reference: float = HBAR_REFERENCE,
    window_fm: tuple[float, float] = RP_WINDOW_FM,
) -> HbarEstimate:
    """4 pi / eta at proton radius R_p (metres), compared with the reference hbar."""
    lo, hi = window_fm
    in_window = lo * FM <= R_p <= hi * FM
    if not in_window:
        logger.warning(
            f"R_p = {R_p / FM:.4g} fm lies outside the sanity window [{lo}, {hi}] fm"
        )
    product = derive_eta_coupling(h).eta_times_Rp
    return HbarEstimate(
        R_p=R_p,
        four_pi_over_eta=4.0 * math.pi * R_p / product,
        reference=reference,
        in_window=in_window,
    )


def _check_radius(r: float) -> None:
    if not r > 0.0:
        raise DomainError(f"Radius must be positive, got {r!r}")
