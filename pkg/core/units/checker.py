"""Equation-consistency checks and the catalogue of force/energy equations."""

from __future__ import annotations

from dataclasses import dataclass, field

from core.units.dimension import Dimension
from core.units.parser import parse_unit


@dataclass(frozen=True)
class ConsistencyReport:
    target: Dimension
    terms: tuple[Dimension, ...]
    consistent: bool
    # term index -> term / target, only for offending terms
    mismatch: dict[int, Dimension] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else "inconsistent"


def check_equation(target: Dimension, terms: list[Dimension]) -> ConsistencyReport:
    """Compare every term's dimension against the target dimension."""
    if not terms:
        raise ValueError("check_equation needs at least one term")
    mismatch = {i: term / target for i, term in enumerate(terms) if term != target}
    return ConsistencyReport(
        target=target,
        terms=tuple(terms),
        consistent=not mismatch,
        mismatch=mismatch,
    )


@dataclass(frozen=True)
class EquationSpec:
    id: str
    title: str
    target: str
    terms: tuple[tuple[str, str], ...]  # (label, unit expression)
    expect_consistent: bool

    def check(self) -> ConsistencyReport:
        return check_equation(
            parse_unit(self.target),
            [parse_unit(expr) for _, expr in self.terms],
        )

    def matches_expectation(self, report: ConsistencyReport) -> bool:
        return report.consistent == self.expect_consistent


EQUATIONS: tuple[EquationSpec, ...] = (
    EquationSpec(
        id="lorentz-naive",
        title="Lorentz force with the dielectric factor only",
        target="N",
        terms=(
            ("electric: q eps^-1 E", "C eps_inv Efield"),
            ("magnetic: q u B", "C u Bfield"),
        ),
        expect_consistent=False,
    ),
    EquationSpec(
        id="lorentz-repaired",
        title="Lorentz force scaled by the coupling eta",
        target="N",
        terms=(
            ("electric: (q/eta) E", "C Efield/eta"),
            ("magnetic: (q/eta) u B", "C u Bfield/eta"),
        ),
        expect_consistent=True,
    ),
    EquationSpec(
        id="force-natural",
        title="Lorentz force with hbar in natural units",
        target="N",
        terms=(
            ("electric: hbar q E/4pi", "hbar C Efield"),
            ("magnetic: hbar q u B/4pi", "hbar C u Bfield"),
        ),
        expect_consistent=True,
    ),
    EquationSpec(
        id="angular-momentum-natural",
        title="Angular momentum of the natural-unit force",
        target="N m",
        terms=(
            ("electric: hbar q r E/4pi", "hbar C m Efield"),
            ("magnetic: hbar q r u B/4pi", "hbar C m u Bfield"),
        ),
        expect_consistent=True,
    ),
    EquationSpec(
        id="radiation-density",
        title="Radiation energy density with hbar",
        target="N/m^2",
        terms=(
            ("electric: (hbar/2)(E/4pi)^2", "hbar Efield^2"),
            ("magnetic: (hbar/2) c^2 (B/4pi)^2", "hbar u^2 Bfield^2"),
        ),
        expect_consistent=True,
    ),
    EquationSpec(
        id="radiation-density-eta",
        title="Radiation energy density with 1/(8 pi eta)",
        target="N/m^2",
        terms=(
            ("electric: E^2/(8 pi eta)", "Efield^2/eta"),
            ("magnetic: c^2 B^2/(8 pi eta)", "u^2 Bfield^2/eta"),
        ),
        expect_consistent=True,
    ),
    EquationSpec(
        id="beta-natural",
        title="Coupling beta once charge is energy per area",
        target="1",
        terms=(("beta: e/(M_p omega^2)", "C s^2/kg"),),
        expect_consistent=True,
    ),
)


def find_equation(equation_id: str) -> EquationSpec | None:
    for spec in EQUATIONS:
        if spec.id == equation_id:
            return spec
    return None


def beta_si_dimension() -> Dimension:
    """Dimension of beta from e/(M_p omega^2) once C is energy per area."""
    return parse_unit("C s^2/kg")
