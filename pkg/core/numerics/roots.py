"""Bracketed root finding."""

from __future__ import annotations

import math
from collections.abc import Callable

from loguru import logger
from scipy import optimize

from core.errors import RootBracketError, SolverError


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Root of ``f`` in [lo, hi] by Brent's method, to an interval of width ``tol``."""
    if not lo < hi:
        raise ValueError(f"find_root needs lo < hi, got lo={lo!r}, hi={hi!r}")
    f_lo, f_hi = f(lo), f(hi)
    if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
        raise RootBracketError(lo, hi, f_lo, f_hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        raise RootBracketError(lo, hi, f_lo, f_hi)

    root, result = optimize.brentq(
        f, lo, hi, xtol=tol, maxiter=max_iter, full_output=True, disp=False
    )
    logger.debug(
        f"brentq [{lo:.6g}, {hi:.6g}] -> {root:.12g} in {result.iterations} iterations"
    )
    if not result.converged:
        raise SolverError(
            f"find_root did not converge on [{lo!r}, {hi!r}] in {max_iter} iterations: "
            f"{result.flag}"
        )
    return float(root)
