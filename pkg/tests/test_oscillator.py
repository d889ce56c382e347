import io
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import DomainError
from core.numerics.quadrature import shell_integral, time_average
from core.physics.oscillator import (
    FM,
    ProtonOscillation,
    WoodsSaxonProfile,
    continuity_residual,
    density_exact,
    density_first_order,
    density_rate,
    dynamic_charge,
    efold_radius,
    efold_radius_closed_form,
    exterior_field,
    field_falloff_exponent,
    momentum_density,
    poisson_source,
    radius_at,
    source_profile,
    time_series,
    woods_saxon_density,
    write_time_series_csv,
)

M_P = 1.67262192369e-27
NU_H = 6.57e15


def _proton(x: float = 1.38e-5, R_p_fm: float = 1.4) -> ProtonOscillation:
    return ProtonOscillation.from_ratio(R_p_fm * FM, x / 3.0, NU_H, M_P)


def test_radius_follows_the_oscillation() -> None:
    p = _proton()
    assert radius_at(p, 0.0) == p.R_p
    assert radius_at(p, p.period / 4.0) == pytest.approx(p.R_p + p.d, rel=1e-15)
    assert radius_at(p, p.period) == pytest.approx(p.R_p, rel=1e-12)


def test_first_order_density() -> None:
    p = _proton(x=0.01)
    assert density_first_order(p, 0.0) == p.rho0
    assert density_first_order(p, p.period / 4.0) == pytest.approx(0.99 * p.rho0, rel=1e-12)


def test_first_order_density_tracks_exact_density() -> None:
    for x in (1e-4, 1e-3, 0.01, 0.05):
        p = _proton(x=x)
        for t in np.linspace(0.0, p.period, 10_000):
            exact = density_exact(p, t)
            assert abs(density_first_order(p, t) - exact) / exact <= 2.0 * x * x


def test_large_amplitude_is_flagged() -> None:
    assert _proton(x=0.05).first_order_valid
    assert not _proton(x=0.2).first_order_valid


def test_invalid_amplitude_is_rejected() -> None:
    with pytest.raises(DomainError):
        ProtonOscillation(R_p=1.4 * FM, d=0.0, omega=1.0, M_p=M_P)
    with pytest.raises(DomainError):
        ProtonOscillation(R_p=1.4 * FM, d=1.4 * FM, omega=1.0, M_p=M_P)


def test_dynamic_charge_vanishes_at_rest_phase() -> None:
    assert dynamic_charge(_proton(), 0.0) == 0.0


def test_dynamic_charge_is_volume_integral_of_source() -> None:
    p = _proton()
    t = p.period / 8.0
    source = source_profile(p, t)
    assert shell_integral(source, 0.0, p.R_p) == pytest.approx(dynamic_charge(p, t), rel=1e-10)


def test_dynamic_charge_averages_to_zero() -> None:
    p = _proton()
    peak = p.beta * p.x * p.M_p * p.omega**2
    mean = time_average(lambda t: dynamic_charge(p, t), p.period, abs_tol=1e-13 * peak * p.period)
    assert abs(mean) <= 1e-12 * peak


def test_dynamic_charge_is_odd_about_half_period() -> None:
    p = _proton()
    half = p.period / 2.0
    peak = p.x * p.M_p * p.omega**2
    for tau in (0.1 * half, 0.37 * half, 0.8 * half):
        assert dynamic_charge(p, half + tau) == pytest.approx(
            -dynamic_charge(p, half - tau), abs=1e-9 * peak
        )


def test_source_is_positive_while_contracting_density() -> None:
    p = _proton()
    for frac in (0.1, 0.25, 0.4):
        assert poisson_source(p, frac * p.period) > 0.0
    profile = source_profile(p, 0.25 * p.period)
    assert profile(2.0 * p.R_p) == 0.0


def test_exterior_field_inverse_square() -> None:
    p = _proton()
    t = p.period / 4.0
    assert exterior_field(p, 2.0 * p.R_p, t) == pytest.approx(
        exterior_field(p, p.R_p, t) / 4.0, rel=1e-14
    )
    assert exterior_field(p, 3.0 * p.R_p, 0.0) == 0.0
    assert exterior_field(p, p.R_p, t, calibration=4.0 * math.pi) == pytest.approx(
        4.0 * math.pi * exterior_field(p, p.R_p, t), rel=1e-15
    )


def test_exterior_field_rejects_interior_radius() -> None:
    p = _proton()
    with pytest.raises(DomainError, match="r >= R_p"):
        exterior_field(p, 0.5 * p.R_p, p.period / 4.0)


def test_field_falloff_exponent_is_minus_two() -> None:
    p = _proton()
    assert field_falloff_exponent(p, p.period / 4.0) == pytest.approx(-2.0, abs=1e-3)
    with pytest.raises(DomainError):
        field_falloff_exponent(p, 0.0)


@given(st.floats(min_value=1.0, max_value=1e5), st.floats(min_value=0.01, max_value=0.49))
def test_field_times_r_squared_is_radius_independent(scale: float, phase: float) -> None:
    p = _proton()
    t = phase * p.period
    r = scale * p.R_p
    assert exterior_field(p, r, t) * r * r == pytest.approx(dynamic_charge(p, t), rel=1e-12)


def test_continuity_holds_inside_the_proton() -> None:
    p = _proton()
    for frac in (0.0, 0.1, 0.3, 0.5):
        assert continuity_residual(p, frac * p.period) <= 1e-8


def test_density_rate_is_the_time_derivative_of_the_density() -> None:
    p = _proton(x=0.05)
    dt = 1e-3 * p.period
    for frac in (0.0, 0.1, 0.4):
        t = frac * p.period
        numeric = (density_first_order(p, t + dt) - density_first_order(p, t - dt)) / (2.0 * dt)
        assert density_rate(p, t) == pytest.approx(numeric, rel=1e-4)


def test_continuity_detects_a_wrong_momentum_density() -> None:
    p = _proton()

    def doubled(q: ProtonOscillation, r: float, t: float) -> float:
        return 2.0 * momentum_density(q, r, t)

    assert continuity_residual(p, 0.0, momentum=doubled) == pytest.approx(1.0, rel=1e-6)
    assert continuity_residual(p, 0.0, momentum=lambda q, r, t: 0.0) == pytest.approx(1.0)


def test_time_series_covers_one_period() -> None:
    p = _proton()
    rows = time_series(p, 2.0 * p.R_p, samples=5)
    assert len(rows) == 5
    assert rows[0][0] == 0.0
    assert rows[-1][0] == pytest.approx(p.period, rel=1e-15)
    peak = p.x * p.M_p * p.omega**2
    assert abs(rows[-1][1] - rows[0][1]) <= 1e-12 * peak
    with pytest.raises(ValueError):
        time_series(p, 2.0 * p.R_p, samples=1)


def test_time_series_csv_header() -> None:
    p = _proton()
    out = io.StringIO()
    write_time_series_csv(time_series(p, 2.0 * p.R_p, samples=3), out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "t_s,q_D,E_at_r"
    assert len(lines) == 4


def test_woods_saxon_profile() -> None:
    w = WoodsSaxonProfile()
    assert woods_saxon_density(w, 1.07) == pytest.approx(0.5, rel=1e-15)
    assert woods_saxon_density(w, 0.0) == pytest.approx(0.875, abs=1e-3)
    radii = np.linspace(0.0, 5.0, 50)
    values = [woods_saxon_density(w, r) for r in radii]
    assert all(a > b for a, b in zip(values, values[1:]))
    with pytest.raises(DomainError):
        woods_saxon_density(w, -0.1)
    with pytest.raises(DomainError):
        WoodsSaxonProfile(skin=0.0)


def test_efold_radius_default_profile() -> None:
    w = WoodsSaxonProfile()
    assert efold_radius(w) == pytest.approx(1.368, abs=1e-3)
    assert efold_radius(w) == pytest.approx(efold_radius_closed_form(w), abs=1e-6)


def test_efold_radius_thin_skin_limit() -> None:
    assert efold_radius(WoodsSaxonProfile(skin=1e-4)) == pytest.approx(1.07, abs=1e-3)


def test_efold_radius_offset_scales_with_skin() -> None:
    base = WoodsSaxonProfile()
    doubled = WoodsSaxonProfile(skin=1.1)
    offset = efold_radius(base) - 1.07
    assert efold_radius(doubled) - 1.07 == pytest.approx(2.0 * offset, abs=1e-6)
