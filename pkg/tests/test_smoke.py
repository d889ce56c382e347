from pathlib import Path

import yaml


def test_package_imports() -> None:
    import core  # noqa: F401


def test_default_config_sections() -> None:
    from core.config import Config

    cfg = Config()
    assert cfg.hydrogen.n == 1
    assert cfg.hydrogen.R_p_fm == 1.4
    assert cfg.gravity.mass == "M_p"
    assert cfg.numerics.poisson_points == 1024
    assert cfg.output.format is None


def test_readme_exists() -> None:
    assert Path("README.md").exists()


def test_load_config_missing_file_returns_defaults(tmp_path: Path) -> None:
    from core.config import load_config

    cfg = load_config(tmp_path / "missing.yaml")
    assert cfg.hydrogen.rp_window_fm == (0.5, 3.0)
    assert cfg.oscillator.woods_saxon.r_half_fm == 1.07
    assert cfg.gravity.decade_rounding is True
    assert cfg.constants_path() is None


def test_load_config_reads_sections(tmp_path: Path) -> None:
    from core.config import load_config

    config_path = tmp_path / "config.yaml"
    data = {
        "hydrogen": {"n": 2, "R_p_fm": "from-woods-saxon"},
        "gravity": {"k_u": 4.0, "mass": 1.0e-26},
        "output": {"format": "json"},
    }
    config_path.write_text(yaml.safe_dump(data))

    cfg = load_config(config_path)
    assert cfg.hydrogen.n == 2
    assert cfg.hydrogen.R_p_fm == "from-woods-saxon"
    assert cfg.gravity.k_u == 4.0
    assert cfg.gravity.mass == 1.0e-26
    assert cfg.output.format == "json"


def test_load_config_rejects_bad_amplitude(tmp_path: Path) -> None:
    import pytest
    from pydantic import ValidationError

    from core.config import load_config

    config_path = tmp_path / "config.yaml"
    config_path.write_text(yaml.safe_dump({"oscillator": {"d_over_Rp": 0.5}}))

    with pytest.raises(ValidationError):
        load_config(config_path)


def test_constants_path_resolves_relative_to_config_file_dir(tmp_path: Path) -> None:
    from core.config import load_config

    config_dir = tmp_path / "configs"
    config_dir.mkdir(parents=True, exist_ok=True)
    config_path = config_dir / "dyncharge.yaml"
    config_path.write_text(yaml.safe_dump({"constants": "overrides/lab.txt"}), encoding="utf-8")

    cfg = load_config(config_path)
    assert cfg.constants_path() == (config_dir / "overrides" / "lab.txt").resolve()
