"""dyncharge - command-line entry point."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import TextIO

from loguru import logger
from pydantic import ValidationError

from core.config import FROM_WOODS_SAXON, Config, load_config
from core.constants.loader import load_constants
from core.constants.registry import ConstantsTable
from core.errors import (
    DynChargeError,
    OutputError,
    ResolutionError,
    SolverError,
    UsageError,
)
from core.physics.oscillator import FM, ProtonOscillation
from core.report.builders import (
    build_constants_report,
    build_gravity_report,
    build_hydrogen_report,
    build_oscillator_report,
    build_poisson_report,
    build_units_report,
    resolve_proton_radius_fm,
)
from core.report.emit import emit
from core.report.schema import Report
from core.units.checker import EQUATIONS, find_equation
from core.utils.logger import setup_logging, verbosity_level
from core.verify import run_acceptance

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

RP_CLI_WINDOW_FM = (0.5, 3.0)
MIN_POISSON_POINTS = 64


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"Usage: {self.format_usage().strip().removeprefix('usage: ')}\n{message}")


def _radius_arg(value: str) -> float | str:
    if value == FROM_WOODS_SAXON:
        return value
    try:
        return float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"expected a radius in fm or '{FROM_WOODS_SAXON}', got {value!r}"
        ) from e


def _mass_arg(value: str) -> float | str:
    if value == "M_p":
        return value
    try:
        return float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a mass in kg or 'M_p', got {value!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--constants",
        default=None,
        help="key=value constants override file.",
    )
    common.add_argument(
        "--config",
        default="config.yaml",
        help="YAML run configuration (default: config.yaml; missing file means defaults).",
    )
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default=None,
        help="Output format (default: text; csv for oscillator).",
    )
    common.add_argument("--out", default=None, help="Write output to this path instead of stdout.")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Debug logging on stderr.")
    verbosity.add_argument("--quiet", action="store_true", help="Only warnings and errors.")

    parser = _ArgumentParser(
        prog="dyncharge",
        description="Dynamic-charge model, natural units, hydrogen ledger and gravity estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    hydrogen = sub.add_parser("hydrogen", parents=[common], help="Hydrogen energy ledger and hbar.")
    hydrogen.add_argument("--n", type=int, default=None, help="Principal quantum number (>= 1).")
    hydrogen.add_argument(
        "--rp-fm",
        type=_radius_arg,
        default=None,
        help=f"Proton radius in fm, or '{FROM_WOODS_SAXON}' (default: 1.4).",
    )
    hydrogen.add_argument("--rh", type=float, default=None, help="Atomic radius R_H in m.")
    hydrogen.add_argument(
        "--quadrature",
        action="store_true",
        help="Also report the numerical space-time quadratures.",
    )

    gravity = sub.add_parser("gravity", parents=[common], help="Gravity band and flux.")
    gravity.add_argument("--ku", type=float, default=None, help="Dimensional constant k_u.")
    gravity.add_argument("--mass", type=_mass_arg, default=None, help="Source mass in kg or 'M_p'.")
    gravity.add_argument(
        "--nu-e", type=float, default=None, help="Electromagnetic frequency in Hz."
    )
    gravity.add_argument(
        "--no-decade-rounding",
        action="store_true",
        help="Use the unrounded sqrt(eps0 G) as the upper ratio bound.",
    )

    units = sub.add_parser("units-check", parents=[common], help="Dimensional consistency check.")
    units.add_argument("equation_id", choices=[spec.id for spec in EQUATIONS])

    oscillator = sub.add_parser("oscillator", parents=[common], help="Dynamic-charge time series.")
    oscillator.add_argument("--rp-fm", type=_radius_arg, default=None, help="Proton radius in fm.")
    oscillator.add_argument("--d-over-rp", type=float, default=None, help="Amplitude d / R_p.")
    oscillator.add_argument("--nu", type=float, default=None, help="Oscillation frequency in Hz.")
    oscillator.add_argument("--samples", type=int, default=None, help="Samples over one period.")
    oscillator.add_argument(
        "--probe-r", type=float, default=None, help="Probe radius in units of R_p (>= 1)."
    )

    poisson = sub.add_parser("poisson-verify", parents=[common], help="Finite-volume field oracle.")
    poisson.add_argument(
        "--grid-points",
        type=int,
        default=None,
        help="Finest grid size; the N/4 grid needs 32 nodes inside R_p.",
    )
    poisson.add_argument("--rp-fm", type=_radius_arg, default=None, help="Proton radius in fm.")
    poisson.add_argument(
        "--profile-csv", default=None, help="Write r_m, phi, E of the finest grid."
    )

    sub.add_parser("constants", parents=[common], help="Dump the effective constants table.")
    sub.add_parser("verify", parents=[common], help="Run the acceptance ledger.")
    return parser


@contextmanager
def _open_output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    out = Path(path).expanduser()
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        f = open(out, "w", encoding="utf-8", newline="")
    except OSError as e:
        raise OutputError(f"Cannot write {out}: {e}") from e
    with f:
        yield f


def _load_inputs(args: argparse.Namespace) -> tuple[Config, ConstantsTable]:
    try:
        config = load_config(args.config)
    except (ValidationError, OSError) as e:
        raise UsageError(f"Invalid config {args.config}: {e}") from e
    source = Path(args.constants).expanduser() if args.constants else config.constants_path()
    return config, load_constants(source)


def _proton_radius_fm(value: float | str | None, config: Config, default: float | str) -> float:
    radius = resolve_proton_radius_fm(
        value if value is not None else default,
        config.oscillator.woods_saxon,
        tol=config.numerics.root_tol,
    )
    lo, hi = RP_CLI_WINDOW_FM
    if not lo < radius < hi:
        raise UsageError(f"Usage: --rp-fm must lie in ({lo}, {hi}) fm, got {radius:g}")
    return radius


def cmd_hydrogen(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    n = args.n if args.n is not None else config.hydrogen.n
    if n < 1:
        raise UsageError(f"Usage: hydrogen --n must be >= 1, got {n}")
    R_p_fm = _proton_radius_fm(args.rp_fm, config, config.hydrogen.R_p_fm)
    return build_hydrogen_report(
        constants,
        n,
        R_p_fm,
        R_H=args.rh if args.rh is not None else config.hydrogen.R_H,
        k1=config.hydrogen.k1,
        quadrature=args.quadrature,
        rel_tol=config.numerics.rel_tol,
        rp_window_fm=config.hydrogen.rp_window_fm,
    )


def cmd_gravity(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    g = config.gravity
    k_u = args.ku if args.ku is not None else g.k_u
    if not k_u > 0.0:
        raise UsageError(f"Usage: gravity --ku must be positive, got {k_u}")
    mass = args.mass if args.mass is not None else g.mass
    return build_gravity_report(
        constants,
        k_u=k_u,
        mass=None if mass == "M_p" else float(mass),
        nu_E=args.nu_e if args.nu_e is not None else g.nu_E,
        decade_rounding=g.decade_rounding and not args.no_decade_rounding,
        comparator_W_per_m2=g.solar_comparator_W_per_m2,
    )


def cmd_units_check(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    spec = find_equation(args.equation_id)
    if spec is None:
        raise UsageError(f"Usage: units-check <equation_id>; unknown id {args.equation_id!r}")
    return build_units_report(spec)


def cmd_oscillator(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    o = config.oscillator
    d_over_Rp = args.d_over_rp if args.d_over_rp is not None else o.d_over_Rp
    if not 0.0 < d_over_Rp < 1.0 / 3.0:
        raise UsageError(
            f"Usage: oscillator --d-over-rp must lie in (0, 1/3), got {d_over_Rp:g} "
            "(zero means no oscillation and no dynamic charge)"
        )
    samples = args.samples if args.samples is not None else o.samples
    if samples < 2:
        raise UsageError(f"Usage: oscillator --samples must be >= 2, got {samples}")
    probe = args.probe_r if args.probe_r is not None else o.probe_r_over_Rp
    if probe < 1.0:
        raise UsageError(f"Usage: oscillator --probe-r must be >= 1 (units of R_p), got {probe:g}")
    nu = args.nu if args.nu is not None else o.nu
    if nu is not None and not nu > 0.0:
        raise UsageError(f"Usage: oscillator --nu must be positive, got {nu:g}")
    return build_oscillator_report(
        constants,
        R_p_fm=_proton_radius_fm(args.rp_fm, config, o.R_p_fm),
        d_over_Rp=d_over_Rp,
        nu=nu,
        beta=o.beta,
        samples=samples,
        probe_r_over_Rp=probe,
    )


def cmd_poisson_verify(
    args: argparse.Namespace, config: Config, constants: ConstantsTable
) -> Report:
    grid_points = args.grid_points
    if grid_points is None:
        grid_points = config.numerics.poisson_points
    if grid_points < MIN_POISSON_POINTS:
        raise UsageError(
            f"Usage: poisson-verify --grid-points must be >= {MIN_POISSON_POINTS}, "
            f"got {grid_points}"
        )
    o = config.oscillator
    p = ProtonOscillation.from_ratio(
        R_p=_proton_radius_fm(args.rp_fm, config, o.R_p_fm) * FM,
        d_over_Rp=o.d_over_Rp,
        nu=o.nu if o.nu is not None else constants.nu_H,
        M_p=constants.M_p,
        beta=o.beta,
    )
    try:
        report, solution = build_poisson_report(
            p, grid_points=grid_points, extent=config.numerics.poisson_extent
        )
    except ResolutionError as e:
        raise UsageError(f"Usage: poisson-verify --grid-points {grid_points}: {e}") from e
    except DynChargeError as e:
        raise SolverError(f"poisson-verify at {grid_points} points failed: {e}") from e
    if args.profile_csv:
        try:
            solution.save_csv(Path(args.profile_csv), config.output.sig_digits_machine)
        except OSError as e:
            raise OutputError(f"Cannot write profile {args.profile_csv}: {e}") from e
        logger.info(f"Wrote radial profile to {args.profile_csv}")
    return report


def cmd_constants(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    return build_constants_report(constants)


def cmd_verify(args: argparse.Namespace, config: Config, constants: ConstantsTable) -> Report:
    return run_acceptance(constants, config)


Command = Callable[[argparse.Namespace, Config, ConstantsTable], Report]

COMMANDS: dict[str, Command] = {
    "hydrogen": cmd_hydrogen,
    "gravity": cmd_gravity,
    "units-check": cmd_units_check,
    "oscillator": cmd_oscillator,
    "poisson-verify": cmd_poisson_verify,
    "constants": cmd_constants,
    "verify": cmd_verify,
}


def _exit_status(report: Report) -> int:
    if getattr(report, "matches_expectation", True) is False:
        return EXIT_FAILURE
    if getattr(report, "passed", True) is False:
        return EXIT_FAILURE
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(verbosity_level(args.verbose, args.quiet))
    config, constants = _load_inputs(args)
    report = COMMANDS[args.command](args, config, constants)

    default_format = "csv" if args.command == "oscillator" else "text"
    fmt = args.format or config.output.format or default_format
    with _open_output(args.out) as out:
        emit(
            report,
            fmt,
            out,
            command=args.command,
            constants=constants,
            sig_digits_machine=config.output.sig_digits_machine,
            sig_digits_text=config.output.sig_digits_text,
        )
    return _exit_status(report)


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point."""
    try:
        return run(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except DynChargeError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
