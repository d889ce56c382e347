"""Finite-volume solver for the spherically symmetric Poisson equation.

Solves (1/r^2) d/dr (r^2 dphi/dr) = -source(r) on a uniform radial grid. The
Laplacian is discretised in conservative form: summing the cell equations gives
r^2 phi' = -Q_enc / 4pi exactly at every cell face, so the discrete Gauss law
holds to rounding.
"""

from __future__ import annotations

import csv
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import numpy as np
import scipy.sparse as sps
import scipy.sparse.linalg as splalg
from loguru import logger

from core.errors import ResolutionError, SolverError
from core.numerics.quadrature import integrate_1d

MIN_POINTS = 16
# Nodes required at or inside the source radius.
MIN_SOURCE_POINTS = 32


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.r_min < self.r_max:
            raise ValueError(
                f"RadialGrid needs 0 <= r_min < r_max, "
                f"got r_min={self.r_min!r}, r_max={self.r_max!r}"
            )
        if self.n_points < MIN_POINTS:
            raise ValueError(f"RadialGrid needs at least {MIN_POINTS} points, got {self.n_points}")

    @property
    def spacing(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points - 1)

    @property
    def r(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n_points)

    def faces(self) -> np.ndarray:
        """Cell boundaries: r_min, the midpoints between nodes, r_max."""
        r = self.r
        return np.concatenate(([self.r_min], 0.5 * (r[:-1] + r[1:]), [self.r_max]))

    def points_within(self, radius: float) -> int:
        return int(np.count_nonzero(self.r <= radius))

    def require_resolved(self, source_radius: float) -> None:
        inside = self.points_within(source_radius)
        if inside < MIN_SOURCE_POINTS:
            raise ResolutionError(
                f"Grid of {self.n_points} points on [{self.r_min:.6g}, {self.r_max:.6g}] "
                f"under-resolves radius {source_radius:.6g}",
                points=inside,
                required=MIN_SOURCE_POINTS,
            )


@dataclass(frozen=True)
class RadialSolution:
    grid: RadialGrid
    phi: np.ndarray
    E: np.ndarray

    def __post_init__(self) -> None:
        if len(self.phi) != self.grid.n_points or len(self.E) != self.grid.n_points:
            raise ValueError("RadialSolution arrays must match the grid length")

    def write_csv(self, out: TextIO, sig_digits: int = 17) -> None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["r_m", "phi", "E"])
        for r, phi, e in zip(self.grid.r, self.phi, self.E):
            writer.writerow([f"{r:.{sig_digits}g}", f"{phi:.{sig_digits}g}", f"{e:.{sig_digits}g}"])

    def save_csv(self, path: Path, sig_digits: int = 17) -> None:
        with open(path, "w", encoding="utf-8", newline="") as f:
            self.write_csv(f, sig_digits)


def cell_charges(
    source: Callable[[float], float],
    grid: RadialGrid,
    rel_tol: float = 1e-10,
    breakpoints: Sequence[float] = (),
) -> np.ndarray:
    """Integral of source * r^2 over each cell (no 4 pi factor)."""
    faces = grid.faces()
    charges = np.empty(grid.n_points)
    for i in range(grid.n_points):
        charges[i] = integrate_1d(
            lambda r: source(r) * r * r,
            faces[i],
            faces[i + 1],
            rel_tol=rel_tol,
            breakpoints=breakpoints,
        )
    return charges


def solve_radial_poisson(
    source: Callable[[float], float],
    grid: RadialGrid,
    total_charge: float,
    breakpoints: Sequence[float] = (),
    source_radius: float | None = None,
) -> RadialSolution:
    """Solve for phi with zero flux at r_min and phi(r_max) = total_charge / (4 pi r_max).

    ``total_charge`` is the volume integral of the source. The field is E = -dphi/dr
    by central differences (second-order one-sided at the ends). ``breakpoints`` are
    radii where the source jumps. With ``source_radius`` set, grids with fewer than
    MIN_SOURCE_POINTS nodes inside it raise ResolutionError.
    """
    if source_radius is not None:
        grid.require_resolved(source_radius)
    n = grid.n_points
    r = grid.r
    h = grid.spacing
    faces = grid.faces()
    if not np.all(np.diff(r) > 0.0):
        raise SolverError("Degenerate radial grid: nodes are not strictly increasing")

    q = cell_charges(source, grid, breakpoints=breakpoints)
    # conductance of the face between node i and i+1
    k = faces[1:-1] ** 2 / h

    main = np.zeros(n)
    lower = np.zeros(n - 1)
    upper = np.zeros(n - 1)
    main[:-1] -= k
    main[1:] -= k
    upper[:] = k
    lower[:] = k
    rhs = -q

    # Dirichlet far field
    main[-1] = 1.0
    lower[-1] = 0.0
    rhs[-1] = total_charge / (4.0 * math.pi * grid.r_max)

    matrix = sps.diags([lower, main, upper], [-1, 0, 1], shape=(n, n), format="csc")
    logger.debug(f"radial Poisson: n={n}, h={h:.6g}, Q={total_charge:.6g}")
    try:
        phi = splalg.spsolve(matrix, rhs)
    except RuntimeError as e:
        raise SolverError(f"Radial Poisson system could not be solved: {e}") from e
    if not np.all(np.isfinite(phi)):
        raise SolverError("Radial Poisson system is singular")

    field = -np.gradient(phi, r, edge_order=2)
    return RadialSolution(grid=grid, phi=phi, E=field)
