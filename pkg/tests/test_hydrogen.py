import math

import pytest

from core.constants.loader import load_constants
from core.errors import DomainError
from core.physics.hydrogen import (
    HydrogenModel,
    default_atomic_radius,
    density_amplitude,
    derive_eta_coupling,
    electron_energy,
    electron_energy_quadrature,
    energy_densities,
    eta_from_radiation_balance,
    hbar_from_radius,
    intrinsic_field,
    matched_amplitude,
    momentum_density,
    oscillation_amplitude,
    radiation_energy_closed_form,
    radiation_energy_quadrature,
    radiation_truncation,
    state_velocity,
)
from core.physics.oscillator import FM, WoodsSaxonProfile, efold_radius


def _model(n: int = 1, R_p_fm: float = 1.4, R_H: float | None = None) -> HydrogenModel:
    return HydrogenModel.from_constants(load_constants(), R_p=R_p_fm * FM, n=n, R_H=R_H)


def test_atomic_radius_from_constants() -> None:
    assert default_atomic_radius(load_constants()) == pytest.approx(3.327e-10, rel=1e-3)


def test_ground_state_velocity() -> None:
    assert state_velocity(_model()) == pytest.approx(2.187e6, rel=5e-3)


def test_velocity_scales_with_state_and_radius() -> None:
    h = _model()
    assert state_velocity(_model(n=2)) == state_velocity(h) / 2.0
    assert state_velocity(_model(R_H=2.0 * h.R_H)) == pytest.approx(2.0 * state_velocity(h))


def test_density_amplitude_spreads_electron_mass_over_circumference() -> None:
    h = _model()
    assert density_amplitude(h) == pytest.approx(4.36e-22, rel=1e-2)
    assert density_amplitude(h) * 2.0 * math.pi * h.R_H == pytest.approx(h.M_e, rel=1e-15)


def test_oscillation_amplitude_by_state() -> None:
    x1 = oscillation_amplitude(_model())
    assert x1 == pytest.approx(1.380e-5, rel=1e-3)
    assert oscillation_amplitude(_model(n=10)) == pytest.approx(x1 / 10.0, rel=1e-15)
    amplitudes = [oscillation_amplitude(_model(n=n)) for n in range(1, 6)]
    assert all(a > b for a, b in zip(amplitudes, amplitudes[1:]))


def test_matched_amplitude_agrees_with_closed_form() -> None:
    h = _model()
    assert matched_amplitude(h) == pytest.approx(oscillation_amplitude(h), rel=1e-9)


def test_energy_densities_partition_the_total() -> None:
    h = _model()
    r = 0.3 * h.R_H
    kinetic, field = energy_densities(h, r, 0.0)
    total = density_amplitude(h) * state_velocity(h) ** 2 / (r * r)
    assert kinetic + field == pytest.approx(total, rel=1e-14)


def test_energy_densities_vanish_at_quarter_period() -> None:
    h = _model()
    r = 0.3 * h.R_H
    scale = density_amplitude(h) * state_velocity(h) ** 2 / (r * r)
    kinetic, field = energy_densities(h, r, h.period / 4.0)
    assert kinetic <= 1e-28 * scale
    assert field <= 1e-28 * scale


def test_field_energy_has_a_node() -> None:
    h = _model()
    r = math.pi / (2.0 * h.wavevector)
    kinetic, field = energy_densities(h, r, 0.0)
    assert field <= 1e-28 * kinetic


def test_energy_densities_reject_non_positive_radius() -> None:
    h = _model()
    with pytest.raises(DomainError):
        energy_densities(h, 0.0, 0.0)
    with pytest.raises(DomainError):
        momentum_density(h, -1.0, 0.0)


def test_energy_densities_reject_radii_beyond_the_atom() -> None:
    h = _model()
    energy_densities(h, h.R_H, 0.0)
    with pytest.raises(DomainError):
        energy_densities(h, 1.01 * h.R_H, 0.0)


def test_intrinsic_field_is_time_derivative_of_momentum() -> None:
    h = _model()
    r = 0.4 * h.R_H
    t = 0.13 * h.period
    dt = 1e-5 * h.period
    numeric = (momentum_density(h, r, t + dt) - momentum_density(h, r, t - dt)) / (2.0 * dt)
    assert intrinsic_field(h, r, t) == pytest.approx(numeric, rel=1e-6)


def test_ground_state_energy_ledger() -> None:
    ledger = electron_energy(_model())
    assert ledger.W_el_eV == pytest.approx(13.6, rel=5e-3)
    assert ledger.W_free_eV == pytest.approx(27.2, rel=5e-3)
    assert ledger.Delta_W == ledger.W_free - ledger.W_el
    assert ledger.W_Rad == ledger.Delta_W
    assert ledger.Delta_W == ledger.W_el


def test_free_electron_energy_is_photon_energy() -> None:
    constants = load_constants()
    ledger = electron_energy(_model())
    assert ledger.W_free == pytest.approx(constants.h * constants.nu_H, rel=1e-12)


def test_electron_energy_quadrature_ratio() -> None:
    check = electron_energy_quadrature(_model())
    assert check.ratio == pytest.approx(2.0, rel=1e-8)


def test_radiation_energy_quadrature_matches_closed_form() -> None:
    h = _model()
    eta = derive_eta_coupling(h).eta
    closed = radiation_energy_closed_form(h, eta)
    numeric = radiation_energy_quadrature(h, eta)
    assert numeric == pytest.approx(closed * (1.0 - radiation_truncation(h)), rel=1e-8)
    assert abs(numeric - closed) / closed <= 1e-3 + radiation_truncation(h)


def test_radiation_energy_balances_half_photon() -> None:
    h = _model()
    eta = derive_eta_coupling(h).eta
    assert radiation_energy_closed_form(h, eta) == pytest.approx(0.5 * h.hbar * h.omega_H)


def test_radiation_energy_scaling() -> None:
    h = _model()
    eta = 1.0e35
    assert radiation_energy_closed_form(h, eta, x=0.0) == 0.0
    half_radius = _model(R_p_fm=0.7)
    assert radiation_energy_closed_form(half_radius, eta) == pytest.approx(
        2.0 * radiation_energy_closed_form(h, eta), rel=1e-12
    )


def test_eta_coupling_at_reference_radius() -> None:
    coupling = derive_eta_coupling(_model())
    assert coupling.eta_times_Rp == pytest.approx(1.78e20, rel=5e-3)
    assert derive_eta_coupling(_model(R_p_fm=2.8)).eta == pytest.approx(coupling.eta / 2.0)
    assert eta_from_radiation_balance(_model()) == pytest.approx(coupling.eta, rel=1e-10)


@pytest.mark.parametrize(
    ("R_p_fm", "expected"),
    [(1.3, 0.92e-34), (1.4, 0.99e-34), (1.5, 1.06e-34)],
)
def test_hbar_from_proton_radius(R_p_fm: float, expected: float) -> None:
    h = _model(R_p_fm=R_p_fm)
    estimate = hbar_from_radius(h, R_p_fm * FM)
    assert estimate.four_pi_over_eta == pytest.approx(expected, rel=1e-2)
    assert estimate.in_window
    assert estimate.R_p_fm == pytest.approx(R_p_fm)


def test_radius_outside_window_is_flagged() -> None:
    h = _model()
    assert not hbar_from_radius(h, 3.5 * FM).in_window


def test_efold_radius_pipeline_lands_near_reference_hbar() -> None:
    R_p_fm = efold_radius(WoodsSaxonProfile())
    estimate = hbar_from_radius(_model(R_p_fm=R_p_fm), R_p_fm * FM)
    assert estimate.four_pi_over_eta == pytest.approx(0.97e-34, rel=1e-2)
    assert abs(estimate.rel_dev) < 0.1


def test_model_validation() -> None:
    with pytest.raises(DomainError):
        _model(n=0)
    with pytest.raises(DomainError):
        HydrogenModel.from_constants(load_constants(), R_p=1.0e-12)
    with pytest.raises(DomainError):
        _model(R_H=-1.0)
