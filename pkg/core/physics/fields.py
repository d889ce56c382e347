"""Natural-unit electromagnetic observables scaled by hbar."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from core.errors import DomainError

Vector = tuple[float, float, float]

SPEED_OF_LIGHT = 299792458.0


def _as_vector(name: str, value: Vector) -> Vector:
    if len(value) != 3:
        raise DomainError(f"{name} must have 3 components, got {len(value)}")
    vec = tuple(float(v) for v in value)
    if not all(math.isfinite(v) for v in vec):
        raise DomainError(f"{name} must be finite, got {vec!r}")
    return vec  # type: ignore[return-value]


@dataclass(frozen=True)
class FieldState:
    """Field values at a point: E (N/m^3), B (N s/m^4), u (m/s), q (J/m^2), lever arm r (m)."""

    E: Vector
    B: Vector
    u: Vector = (0.0, 0.0, 0.0)
    q: float = 1.0
    r: Vector = (0.0, 0.0, 0.0)
    c: float = SPEED_OF_LIGHT

    def __post_init__(self) -> None:
        for name in ("E", "B", "u", "r"):
            object.__setattr__(self, name, _as_vector(name, getattr(self, name)))
        if not math.isfinite(self.q):
            raise DomainError(f"q must be finite, got {self.q!r}")
        speed = math.sqrt(sum(v * v for v in self.u))
        if speed >= self.c:
            logger.warning(f"|u| = {speed:.6g} m/s is not below c = {self.c:.6g} m/s")


def _bracket(s: FieldState) -> np.ndarray:
    """E/4pi + u x B/4pi."""
    return (np.asarray(s.E) + np.cross(s.u, s.B)) / (4.0 * math.pi)


def _to_vector(arr: np.ndarray) -> Vector:
    return (float(arr[0]), float(arr[1]), float(arr[2]))


def lorentz_force(s: FieldState, hbar_natural: float) -> Vector:
    """F = hbar q (E/4pi + u x B/4pi), in N."""
    return _to_vector(hbar_natural * s.q * _bracket(s))


def force_density(s: FieldState, charge_density: float, hbar_natural: float) -> Vector:
    """Force per unit volume with the point charge replaced by a density (C/m^3)."""
    if not math.isfinite(charge_density):
        raise DomainError(f"charge_density must be finite, got {charge_density!r}")
    return _to_vector(hbar_natural * charge_density * _bracket(s))


def angular_momentum(s: FieldState, hbar_natural: float) -> Vector:
    """L = hbar q r x (E/4pi + u x B/4pi), in N m."""
    return _to_vector(hbar_natural * s.q * np.cross(s.r, _bracket(s)))


def radiation_density(
    E: float,
    B: float,
    hbar_natural: float,
    c: float = SPEED_OF_LIGHT,
) -> float:
    """(hbar/2) [(E/4pi)^2 + c^2 (B/4pi)^2], in N/m^2."""
    if E < 0.0 or B < 0.0:
        raise DomainError(f"Field magnitudes must be non-negative, got E={E!r}, B={B!r}")
    e_term = (E / (4.0 * math.pi)) ** 2
    b_term = c * c * (B / (4.0 * math.pi)) ** 2
    return 0.5 * hbar_natural * (e_term + b_term)


def radiation_density_eta(
    E: float,
    B: float,
    eta_coupling: float,
    c: float = SPEED_OF_LIGHT,
) -> float:
    """(E^2 + c^2 B^2) / (8 pi eta); equals radiation_density when hbar = 4pi/eta."""
    if E < 0.0 or B < 0.0:
        raise DomainError(f"Field magnitudes must be non-negative, got E={E!r}, B={B!r}")
    return (E * E + c * c * B * B) / (8.0 * math.pi * eta_coupling)


def hbar_from_eta(eta_coupling: float) -> float:
    return 4.0 * math.pi / eta_coupling
