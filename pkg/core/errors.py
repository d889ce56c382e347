"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from core.units.dimension import Dimension


class DynChargeError(Exception):
    """Base class for every error raised by dyncharge."""


class UsageError(DynChargeError):
    """Invalid command-line usage (exit status 2)."""


class ConstantsError(DynChargeError, ValueError):
    """Rejected constants override."""

    def __init__(self, message: str, key: str | None = None) -> None:
        super().__init__(message)
        self.key = key


class UnitParseError(DynChargeError, ValueError):
    """Unit expression does not conform to the grammar or names an unknown symbol."""

    def __init__(self, message: str, symbol: str = "", position: int = 0) -> None:
        super().__init__(f"{message} (at position {position})")
        self.symbol = symbol
        self.position = position


class DimensionMismatchError(DynChargeError, ValueError):
    """Addition or subtraction between quantities of different dimension."""

    def __init__(self, left: Dimension, right: Dimension) -> None:
        super().__init__(f"Dimension mismatch: [{left}] vs [{right}]")
        self.left = left
        self.right = right


class DomainError(DynChargeError, ValueError):
    """Argument outside the domain where a formula is defined."""


class QuadratureError(DynChargeError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, error_estimate: float) -> None:
        super().__init__(f"{message} (best estimate {estimate!r}, error ~{error_estimate:.3g})")
        self.estimate = estimate
        self.error_estimate = error_estimate


class RootBracketError(DynChargeError, ValueError):
    """Root-finding interval does not bracket a sign change."""

    def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float) -> None:
        super().__init__(
            f"No sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
        self.lo = lo
        self.hi = hi
        self.f_lo = f_lo
        self.f_hi = f_hi


class SolverError(DynChargeError, RuntimeError):
    """Numerical solve did not converge or its linear system is singular."""


class ResolutionError(DynChargeError, ValueError):
    """Grid too coarse to resolve the source region."""

    def __init__(self, message: str, points: int, required: int) -> None:
        super().__init__(f"{message}: {points} points inside the source, need {required}")
        self.points = points
        self.required = required


class OutputError(DynChargeError):
    """Report or profile could not be written."""
