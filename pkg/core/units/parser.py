"""Unit-expression parser for the natural electromagnetic unit system.

Grammar (single level, no grouping)::

    expr     := factors [ "/" factors ]
    factors  := factor { sep factor }
    factor   := SYMBOL [ "^" exponent ]
    exponent := signed-integer | "(" signed-integer "/" integer ")"
    sep      := whitespace | "·" | "*"

Every symbol after ``/`` goes to the denominator. Charge is energy per area
(``C = J/m^2``), so every table entry reduces to pure (m, kg, s).
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from fractions import Fraction
from types import MappingProxyType

from core.errors import UnitParseError
from core.units.dimension import DIMENSIONLESS, Dimension

_M = Dimension.of(m=1)
_KG = Dimension.of(kg=1)
_S = Dimension.of(s=1)
_N = _KG * _M / _S**2
_J = _N * _M
_C = _J / _M**2

UnitTable = Mapping[str, Dimension]

UNIT_TABLE: UnitTable = MappingProxyType({
    "1": DIMENSIONLESS,
    "m": _M,
    "kg": _KG,
    "s": _S,
    "Hz": _S**-1,
    "rad": DIMENSIONLESS,
    "N": _N,
    "J": _J,
    "eV": _J,
    "W": _J / _S,
    "Pa": _N / _M**2,
    "C": _C,
    "Efield": _N / _M**3,
    "Bfield": _N * _S / _M**4,
    "u": _M / _S,
    "eps_inv": _M**4 / _N,
    "eta": _N / _M**4,
    "beta": DIMENSIONLESS,
    "hbar": _N**-1 * _M**4,
    "sigma": _C / _M**3,
})

_SYMBOL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|1(?![0-9])")
_INT = re.compile(r"[+-]?[0-9]+")
_RATIONAL = re.compile(r"\(([+-]?[0-9]+)/([0-9]+)\)")
_SEPARATORS = {" ", "\t", "·", "*"}


class _Scanner:
    def __init__(self, text: str, table: UnitTable) -> None:
        self.text = text
        self.pos = 0
        self.table = table

    def skip_separators(self) -> bool:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _SEPARATORS:
            self.pos += 1
        return self.pos > start

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if not self.at_end() else ""

    def factor(self) -> Dimension:
        match = _SYMBOL.match(self.text, self.pos)
        if not match:
            found = self.peek() or "end of input"
            raise UnitParseError(f"Expected a unit symbol, found {found!r}", found, self.pos)
        symbol = match.group(0)
        if symbol not in self.table:
            raise UnitParseError(f"Unknown unit symbol {symbol!r}", symbol, self.pos)
        dim = self.table[symbol]
        self.pos = match.end()
        if self.peek() == "^":
            self.pos += 1
            dim = dim ** self.exponent(symbol)
        return dim

    def exponent(self, symbol: str) -> Fraction:
        rational = _RATIONAL.match(self.text, self.pos)
        if rational:
            denominator = int(rational.group(2))
            if denominator == 0:
                message = f"Zero denominator in exponent of {symbol!r}"
                raise UnitParseError(message, symbol, self.pos)
            self.pos = rational.end()
            return Fraction(int(rational.group(1)), denominator)
        integer = _INT.match(self.text, self.pos)
        if not integer:
            raise UnitParseError(f"Malformed exponent for {symbol!r}", symbol, self.pos)
        self.pos = integer.end()
        return Fraction(int(integer.group(0)))


def parse_unit(expr: str, table: UnitTable = UNIT_TABLE) -> Dimension:
    """Reduce a unit expression to its (m, kg, s) Dimension."""
    scanner = _Scanner(expr, table)
    scanner.skip_separators()
    if scanner.at_end():
        raise UnitParseError("Empty unit expression", "", 0)

    result = DIMENSIONLESS
    in_denominator = False
    need_factor = True
    separated = True
    while not scanner.at_end():
        if scanner.peek() == "/":
            if need_factor:
                raise UnitParseError("'/' must follow a unit symbol", "/", scanner.pos)
            if in_denominator:
                raise UnitParseError("Only one '/' is allowed", "/", scanner.pos)
            in_denominator = True
            need_factor = True
            scanner.pos += 1
            scanner.skip_separators()
            continue
        if not need_factor and not separated:
            found = scanner.peek()
            raise UnitParseError(f"Unexpected character {found!r}", found, scanner.pos)
        dim = scanner.factor()
        result = result / dim if in_denominator else result * dim
        separated = scanner.skip_separators()
        need_factor = False
    if need_factor:
        raise UnitParseError("Missing unit symbol after '/'", "/", scanner.pos)
    return result
