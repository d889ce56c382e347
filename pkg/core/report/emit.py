"""Render reports as json, csv or a rich text table."""

from __future__ import annotations

import csv
import json
from datetime import datetime, timezone
from typing import Any, Literal, TextIO

from rich.console import Console
from rich.table import Table

from core import __version__
from core.constants.registry import ConstantsTable
from core.report.schema import ConstantsReport, OscillatorReport, Report, VerifyReport

Format = Literal["text", "json", "csv"]

_LEVEL_STYLE = {"PASS": "green", "WARN": "yellow", "FAIL": "bold red"}


def format_value(value: object, sig_digits: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{sig_digits}g}"
    return str(value)


def build_meta(command: str, constants: ConstantsTable | None) -> dict[str, Any]:
    """Run metadata; kept apart from the payload so payloads stay reproducible."""
    return {
        "version": __version__,
        "command": command,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "overridden_constants": constants.overridden() if constants is not None else [],
    }


def emit_json(report: Report, out: TextIO, meta: dict[str, Any]) -> None:
    payload = report.model_dump(mode="json")
    payload["meta"] = meta
    out.write(json.dumps(payload, allow_nan=False))
    out.write("\n")


def emit_csv(report: Report, out: TextIO, sig_digits: int = 17) -> None:
    writer = csv.writer(out, lineterminator="\n")
    if isinstance(report, OscillatorReport):
        writer.writerow(["t_s", "q_D", "E_at_r"])
        for s in report.samples:
            writer.writerow([format_value(v, sig_digits) for v in (s.t_s, s.q_D, s.E_at_r)])
        return
    if isinstance(report, ConstantsReport):
        writer.writerow(["name", "value", "unit", "provenance"])
        for c in report.constants:
            writer.writerow([c.name, format_value(c.value, sig_digits), c.unit, c.provenance])
        return
    writer.writerow(["field", "value"])
    for key, value in report.rows():
        writer.writerow([key, format_value(value, sig_digits)])


def emit_text(report: Report, out: TextIO, title: str, sig_digits: int = 4) -> None:
    console = Console(file=out, width=100, highlight=False)
    if isinstance(report, VerifyReport):
        table = Table(title=title, show_header=True)
        table.add_column("Level", width=6)
        table.add_column("Check")
        table.add_column("Detail")
        for f in report.findings:
            style = _LEVEL_STYLE[f.level]
            table.add_row(f"[{style}]{f.level}[/{style}]", f.check, f.message)
        console.print(table)
        summary = report.summary
        console.print(
            f"PASS={summary.get('PASS', 0)} WARN={summary.get('WARN', 0)} "
            f"FAIL={summary.get('FAIL', 0)}"
        )
        return

    table = Table(title=title, show_header=True)
    table.add_column("Field", style="bold")
    table.add_column("Value", justify="right")
    for key, value in report.rows():
        table.add_row(key, format_value(value, sig_digits))
    console.print(table)

    if isinstance(report, OscillatorReport):
        series = Table(show_header=True)
        for name in ("t_s", "q_D", "E_at_r"):
            series.add_column(name, justify="right")
        for s in report.samples:
            series.add_row(*(format_value(v, sig_digits) for v in (s.t_s, s.q_D, s.E_at_r)))
        console.print(series)


def emit(
    report: Report,
    fmt: Format,
    out: TextIO,
    *,
    command: str,
    constants: ConstantsTable | None = None,
    sig_digits_machine: int = 17,
    sig_digits_text: int = 4,
) -> None:
    if fmt == "json":
        emit_json(report, out, build_meta(command, constants))
    elif fmt == "csv":
        emit_csv(report, out, sig_digits_machine)
    elif fmt == "text":
        emit_text(report, out, command, sig_digits_text)
    else:
        raise ValueError(f"Unknown output format {fmt!r}")
