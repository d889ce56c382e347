"""Load the constants table, applying key=value overrides."""

from __future__ import annotations

import math
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from core.constants.registry import (
    CONSTANT_NAMES,
    ConstantsTable,
    Provenance,
    default_values,
)
from core.errors import ConstantsError


def parse_overrides(text: str) -> dict[str, float]:
    """Parse a flat ``key = value`` document. ``#`` starts a comment."""
    overrides: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConstantsError(f"Line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value_text = line.partition("=")
        key = key.strip()
        if key not in CONSTANT_NAMES:
            raise ConstantsError(f"Line {lineno}: unknown constant {key!r}", key=key)
        if key in overrides:
            raise ConstantsError(f"Line {lineno}: duplicate constant {key!r}", key=key)
        try:
            value = float(value_text.strip())
        except ValueError as e:
            raise ConstantsError(
                f"Line {lineno}: value for {key!r} is not a number: {value_text.strip()!r}",
                key=key,
            ) from e
        if not math.isfinite(value) or value <= 0.0:
            raise ConstantsError(
                f"Line {lineno}: value for {key!r} must be positive and finite, got {value!r}",
                key=key,
            )
        overrides[key] = value
    return overrides


def build_table(overrides: dict[str, float] | None = None) -> ConstantsTable:
    """Apply overrides to the defaults. hbar_si follows h unless set explicitly."""
    overrides = dict(overrides or {})
    unknown = sorted(set(overrides) - set(CONSTANT_NAMES))
    if unknown:
        raise ConstantsError(f"Unknown constant {unknown[0]!r}", key=unknown[0])

    values = default_values()
    provenance: dict[str, Provenance] = {name: "default" for name in CONSTANT_NAMES}
    for key, value in overrides.items():
        values[key] = value
        provenance[key] = "overridden"
    if "h" in overrides and "hbar_si" not in overrides:
        values["hbar_si"] = values["h"] / (2.0 * math.pi)
        provenance["hbar_si"] = "derived"

    try:
        return ConstantsTable(**values, provenance=provenance)
    except ValidationError as e:
        first = e.errors()[0]
        loc = first.get("loc") or ("",)
        key = str(loc[0]) if loc else ""
        message = f"Invalid constant {key!r}: {first.get('msg')}"
        raise ConstantsError(message, key=key or None) from e


def load_constants(override_source: str | Path | None = None) -> ConstantsTable:
    """Return the defaults with overrides applied.

    ``override_source`` is either a path to an override file or the document text itself.
    """
    if override_source is None:
        return build_table()
    if isinstance(override_source, Path):
        p = override_source.expanduser()
        if not p.exists():
            raise ConstantsError(f"Constants override file not found: {p}")
        text = p.read_text(encoding="utf-8")
        logger.info(f"Loading constants overrides from {p}")
    else:
        text = override_source
    overrides = parse_overrides(text)
    table = build_table(overrides)
    if overrides:
        logger.info(f"Constants overridden: {', '.join(sorted(overrides))}")
    return table
