import math
from pathlib import Path

import pytest
from pydantic import ValidationError

from core.constants.loader import build_table, load_constants, parse_overrides
from core.constants.registry import CONSTANT_NAMES, ConstantsTable
from core.errors import ConstantsError


def test_defaults_are_all_default_provenance() -> None:
    table = load_constants()
    assert table.nu_H == 6.57e15
    assert table.hbar_natural == 1.0546e-34
    assert table.overridden() == []
    assert set(table.provenance.values()) == {"default"}
    assert list(table.values()) == list(CONSTANT_NAMES)


def test_hbar_si_matches_h_over_two_pi() -> None:
    table = load_constants()
    assert table.hbar_si / table.h == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-12)


def test_hydrogen_photon_energy_in_ev() -> None:
    table = load_constants()
    assert table.h * table.nu_H / table.eV == pytest.approx(27.2, rel=5e-3)


def test_override_marks_provenance() -> None:
    table = load_constants("nu_H = 1.0e15\n")
    assert table.nu_H == 1.0e15
    assert table.provenance["nu_H"] == "overridden"
    assert table.provenance["M_e"] == "default"
    assert table.overridden() == ["nu_H"]


def test_overriding_h_derives_hbar_si() -> None:
    table = build_table({"h": 6.0e-34})
    assert table.provenance["hbar_si"] == "derived"
    assert table.hbar_si == pytest.approx(6.0e-34 / (2.0 * math.pi), rel=1e-15)


def test_inconsistent_hbar_si_is_rejected() -> None:
    with pytest.raises(ConstantsError, match="hbar_si"):
        build_table({"hbar_si": 1.0e-34})


def test_comments_and_blank_lines_are_ignored() -> None:
    text = "# lab values\n\nM_E = 6.0e24   # rounded\n"
    assert parse_overrides(text) == {"M_E": 6.0e24}


def test_unknown_key_is_named() -> None:
    with pytest.raises(ConstantsError, match="planck_mass") as exc:
        load_constants("planck_mass = 2.2e-8\n")
    assert exc.value.key == "planck_mass"


@pytest.mark.parametrize("value", ["-1.0", "0", "nan", "inf", "twelve"])
def test_bad_values_are_rejected(value: str) -> None:
    with pytest.raises(ConstantsError) as exc:
        load_constants(f"tau_E = {value}\n")
    assert exc.value.key == "tau_E"


def test_duplicate_and_malformed_lines_are_rejected() -> None:
    with pytest.raises(ConstantsError):
        parse_overrides("c = 3e8\nc = 2.9e8\n")
    with pytest.raises(ConstantsError):
        parse_overrides("c 3e8\n")


def test_override_file_is_read_from_path(tmp_path: Path) -> None:
    path = tmp_path / "constants.txt"
    path.write_text("R_O = 1.5e11\n", encoding="utf-8")

    table = load_constants(path)
    assert table.R_O == 1.5e11
    assert table.overridden() == ["R_O"]


def test_missing_override_file_raises(tmp_path: Path) -> None:
    with pytest.raises(ConstantsError):
        load_constants(tmp_path / "nope.txt")


def test_table_is_immutable() -> None:
    table = load_constants()
    with pytest.raises(ValidationError):
        table.nu_H = 1.0  # type: ignore[misc]


def test_loading_is_deterministic() -> None:
    assert load_constants("G = 6.7e-11").model_dump() == load_constants("G = 6.7e-11").model_dump()
    assert isinstance(load_constants(), ConstantsTable)
