from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import DimensionMismatchError, UnitParseError
from core.units.checker import EQUATIONS, beta_si_dimension, check_equation, find_equation
from core.units.dimension import DIMENSIONLESS, Dimension, Quantity, quantity_arith
from core.units.parser import UNIT_TABLE, parse_unit

symbols = st.sampled_from(sorted(UNIT_TABLE))
exponents = st.fractions(min_value=-6, max_value=6, max_denominator=6)
dimensions = st.builds(Dimension, exponents, exponents, exponents)


def test_parse_base_and_derived_units() -> None:
    assert parse_unit("m") == Dimension.of(m=1)
    assert parse_unit("N m^-4") == Dimension.of(m=-3, kg=1, s=-2)
    assert parse_unit("N·m") == parse_unit("J")
    assert parse_unit("kg*m/s^2") == parse_unit("N")
    assert parse_unit("C") == parse_unit("J/m^2")


def test_charge_per_mass_per_frequency_squared_is_dimensionless() -> None:
    assert parse_unit("C s^2/kg").is_dimensionless
    assert beta_si_dimension() == DIMENSIONLESS


def test_hbar_is_inverse_force_times_volume_per_length() -> None:
    assert parse_unit("hbar") == parse_unit("m^4/N")
    assert parse_unit("hbar eta").is_dimensionless


def test_rational_exponent() -> None:
    assert parse_unit("m^(1/2)") == Dimension.of(m=Fraction(1, 2))
    assert parse_unit("m^(-3/6)") == Dimension.of(m=Fraction(-1, 2))


def test_unknown_symbol_reports_position() -> None:
    with pytest.raises(UnitParseError) as exc:
        parse_unit("kg furlong")
    assert exc.value.symbol == "furlong"
    assert exc.value.position == 3


@pytest.mark.parametrize("expr", ["", "   ", "m^x", "m/s/s", "/s", "m/", "m^(1/0)", "m^"])
def test_malformed_expressions_are_rejected(expr: str) -> None:
    with pytest.raises(UnitParseError):
        parse_unit(expr)


def test_render_is_canonical() -> None:
    assert parse_unit("N/m^4").render() == "m^-3 kg s^-2"
    assert DIMENSIONLESS.render() == "1"
    assert Dimension.of(m=Fraction(1, 2), s=-1).render() == "m^(1/2) s^-1"


@given(symbols, symbols)
def test_parse_is_a_group_homomorphism(a: str, b: str) -> None:
    assert parse_unit(f"{a} {b}") == parse_unit(a) * parse_unit(b)
    assert parse_unit(f"{a}/{b}") == parse_unit(a) / parse_unit(b)


@given(dimensions)
def test_render_parses_back(dim: Dimension) -> None:
    assert parse_unit(dim.render()) == dim


@given(dimensions, dimensions, dimensions)
def test_dimension_algebra_laws(a: Dimension, b: Dimension, c: Dimension) -> None:
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a.inverse() == DIMENSIONLESS
    assert (a * b) ** 2 == a**2 * b**2


def test_naive_lorentz_force_is_off_by_force_per_volume_length() -> None:
    spec = find_equation("lorentz-naive")
    assert spec is not None
    report = spec.check()
    assert report.consistent is False
    assert report.verdict == "inconsistent"
    assert list(report.mismatch) == [1]
    assert report.mismatch[1] == parse_unit("N/m^4")
    assert spec.matches_expectation(report)


@pytest.mark.parametrize("spec", EQUATIONS, ids=[s.id for s in EQUATIONS])
def test_catalogue_verdicts_match_expectations(spec) -> None:
    report = spec.check()
    assert report.consistent is spec.expect_consistent
    assert spec.matches_expectation(report)


def test_repaired_and_natural_forms_are_consistent() -> None:
    for equation_id in ("lorentz-repaired", "force-natural", "radiation-density-eta"):
        spec = find_equation(equation_id)
        assert spec is not None and spec.check().consistent


def test_angular_momentum_target_is_newton_metre() -> None:
    spec = find_equation("angular-momentum-natural")
    assert spec is not None
    assert spec.check().target == parse_unit("J")


def test_check_equation_needs_terms() -> None:
    with pytest.raises(ValueError):
        check_equation(parse_unit("N"), [])
    assert find_equation("bogus") is None


def test_quantity_arithmetic() -> None:
    newton = parse_unit("N")
    total = quantity_arith(Quantity(3.0, newton), Quantity(4.0, newton), "add")
    assert total == Quantity(7.0, newton)

    area = quantity_arith(Quantity(2.0, parse_unit("m")), Quantity(2.0, parse_unit("m")), "mul")
    assert area == Quantity(4.0, parse_unit("m^2"))

    charge = Quantity(1.0, parse_unit("C"))
    ratio = quantity_arith(charge, Quantity(1.0, parse_unit("J/m^2")), "div")
    assert ratio.dim.is_dimensionless

    cube = quantity_arith(Quantity(2.0, parse_unit("s")), 3, "pow")
    assert cube == Quantity(8.0, parse_unit("s^3"))


def test_adding_mismatched_quantities_raises() -> None:
    with pytest.raises(DimensionMismatchError) as exc:
        quantity_arith(Quantity(1.0, parse_unit("N")), Quantity(1.0, parse_unit("J")), "sub")
    assert exc.value.left == parse_unit("N")
    assert exc.value.right == parse_unit("J")


def test_pow_needs_integer_exponent() -> None:
    with pytest.raises(TypeError):
        quantity_arith(Quantity(2.0), Quantity(1.0), "pow")  # type: ignore[arg-type]
