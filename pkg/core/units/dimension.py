"""Dimension algebra over the three base units m, kg, s, and dimensioned quantities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from core.errors import DimensionMismatchError

BASE_UNITS: tuple[str, ...] = ("m", "kg", "s")

Exponent = Fraction | int


def _frac(value: Exponent) -> Fraction:
    # Fraction normalises to lowest terms on construction.
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Dimension:
    """Rational exponents of (m, kg, s). ``Dimension()`` is dimensionless."""

    m_exp: Fraction = Fraction(0)
    kg_exp: Fraction = Fraction(0)
    s_exp: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_exp", _frac(self.m_exp))
        object.__setattr__(self, "kg_exp", _frac(self.kg_exp))
        object.__setattr__(self, "s_exp", _frac(self.s_exp))

    @classmethod
    def of(cls, m: Exponent = 0, kg: Exponent = 0, s: Exponent = 0) -> Dimension:
        return cls(_frac(m), _frac(kg), _frac(s))

    @property
    def exponents(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.m_exp, self.kg_exp, self.s_exp)

    @property
    def is_dimensionless(self) -> bool:
        return self.exponents == (0, 0, 0)

    def __mul__(self, other: Dimension) -> Dimension:
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(*(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Dimension) -> Dimension:
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(*(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, power: Exponent) -> Dimension:
        p = _frac(power)
        return Dimension(*(a * p for a in self.exponents))

    def inverse(self) -> Dimension:
        return self ** -1

    def render(self) -> str:
        """Canonical form ``m^a kg^b s^c``; zero exponents omitted, ``1`` when dimensionless."""
        parts: list[str] = []
        for symbol, exp in zip(BASE_UNITS, self.exponents):
            if exp == 0:
                continue
            if exp == 1:
                parts.append(symbol)
            elif exp.denominator == 1:
                parts.append(f"{symbol}^{exp.numerator}")
            else:
                parts.append(f"{symbol}^({exp.numerator}/{exp.denominator})")
        return " ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


DIMENSIONLESS = Dimension()

ArithOp = Literal["add", "sub", "mul", "div", "pow"]


@dataclass(frozen=True)
class Quantity:
    value: float
    dim: Dimension = DIMENSIONLESS

    def __add__(self, other: Quantity) -> Quantity:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim)
        return Quantity(self.value + other.value, self.dim)

    def __sub__(self, other: Quantity) -> Quantity:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim)
        return Quantity(self.value - other.value, self.dim)

    def __mul__(self, other: Quantity | float) -> Quantity:
        if isinstance(other, Quantity):
            return Quantity(self.value * other.value, self.dim * other.dim)
        return Quantity(self.value * other, self.dim)

    __rmul__ = __mul__

    def __truediv__(self, other: Quantity | float) -> Quantity:
        if isinstance(other, Quantity):
            return Quantity(self.value / other.value, self.dim / other.dim)
        return Quantity(self.value / other, self.dim)

    def __pow__(self, power: int) -> Quantity:
        return Quantity(self.value**power, self.dim**power)

    def __str__(self) -> str:
        return f"{self.value:.4g} [{self.dim}]"


def quantity_arith(a: Quantity, b: Quantity | int, op: ArithOp) -> Quantity:
    """Combine two quantities. For ``pow`` the second operand is an integer power."""
    if op == "pow":
        if not isinstance(b, int) or isinstance(b, bool):
            raise TypeError(f"pow expects an integer exponent, got {type(b).__name__}")
        return a**b
    if not isinstance(b, Quantity):
        raise TypeError(f"{op} expects a Quantity operand, got {type(b).__name__}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown operation {op!r}")
