"""Adaptive one-dimensional quadrature (QUADPACK via scipy)."""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable, Sequence

import numpy as np
from loguru import logger
from scipy import integrate

from core.errors import QuadratureError

MIN_REL_TOL = 1e-14
MAX_REL_TOL = 1e-2
DEFAULT_MAX_SUBDIVISIONS = 200

# QUADPACK refuses relative tolerances below 50 machine epsilons.
_QUADPACK_FLOOR = 50.0 * np.finfo(float).eps


def integrate_1d(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS,
    breakpoints: Sequence[float] = (),
) -> float:
    """Integrate ``f`` over [a, b] by globally adaptive Gauss-Kronrod subdivision.

    Converged when the error estimate is below ``max(abs_tol, rel_tol * |I|)``.
    Raises QuadratureError with the best estimate attached otherwise.
    ``breakpoints`` inside (a, b) mark known discontinuities.
    """
    if not a < b:
        raise ValueError(f"integrate_1d needs a < b, got a={a!r}, b={b!r}")
    if not MIN_REL_TOL <= rel_tol <= MAX_REL_TOL:
        raise ValueError(f"rel_tol must lie in [{MIN_REL_TOL}, {MAX_REL_TOL}], got {rel_tol!r}")

    epsrel = max(rel_tol, _QUADPACK_FLOOR)
    inner = sorted(x for x in breakpoints if a < x < b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, info, *rest = integrate.quad(
            f,
            a,
            b,
            epsabs=abs_tol,
            epsrel=epsrel,
            limit=max_subdivisions,
            points=inner or None,
            full_output=1,
        )
    ier = 0 if not rest else 1
    neval = info.get("neval", 0) if isinstance(info, dict) else 0
    logger.debug(f"quad [{a:.6g}, {b:.6g}]: value={value:.17g} err={err:.3g} neval={neval}")

    if not math.isfinite(value):
        raise QuadratureError("Integrand produced a non-finite result", value, err)
    if ier and err > max(abs_tol, epsrel * abs(value)):
        message = rest[0] if rest else "no convergence"
        raise QuadratureError(
            f"Quadrature did not converge after {max_subdivisions} subdivisions: "
            f"{str(message).splitlines()[0]}",
            value,
            err,
        )
    return float(value)


def time_average(
    f: Callable[[float], float],
    period: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
) -> float:
    """Mean of ``f`` over one period starting at t = 0."""
    return integrate_1d(f, 0.0, period, rel_tol=rel_tol, abs_tol=abs_tol) / period


def shell_integral(
    density: Callable[[float], float],
    r_inner: float,
    r_outer: float,
    rel_tol: float = 1e-10,
    log_radius: bool = False,
) -> float:
    """Integrate a radial density over a spherical shell with the 4 pi r^2 weight.

    ``log_radius`` integrates in u = ln r, which keeps shells spanning many
    decades (proton radius to atomic radius) well resolved.
    """
    if not log_radius:
        return integrate_1d(
            lambda r: 4.0 * math.pi * r * r * density(r), r_inner, r_outer, rel_tol=rel_tol
        )
    if r_inner <= 0.0:
        raise ValueError(f"log_radius needs r_inner > 0, got {r_inner!r}")

    def integrand(u: float) -> float:
        r = math.exp(u)
        return 4.0 * math.pi * r**3 * density(r)

    return integrate_1d(integrand, math.log(r_inner), math.log(r_outer), rel_tol=rel_tol)
