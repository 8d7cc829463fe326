"""Cochains (discrete differential forms), boundary traces, vector samples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PRIMAL = "primal"
DUAL = "dual"


@dataclass
class Cochain:
    """One real value per k-cell.

    Primal k-cochains live on primal k-cells.  Dual k-cochains live on dual
    k-cells, which are indexed by the primal (n-k)-cells they intersect.
    Top-degree cochains store integrated densities (cell sums, not point
    values); 0-cochains store point values.
    """

    grid: object
    degree: int
    placement: str
    values: np.ndarray

    def __post_init__(self):
        if not 0 <= self.degree <= self.grid.dim:
            raise ValueError(f"degree {self.degree} out of range for n={self.grid.dim}")
        if self.placement not in (PRIMAL, DUAL):
            raise ValueError(f"bad placement {self.placement!r}")
        self.values = np.asarray(self.values, dtype=float)
        expected = self.grid.n_cells(self.degree, self.placement)
        if self.values.shape != (expected,):
            raise ValueError(
                f"values shape {self.values.shape} != ({expected},) for "
                f"{self.placement} {self.degree}-cochain"
            )

    def copy(self):
        return Cochain(self.grid, self.degree, self.placement, self.values.copy())

    def _like(self, values):
        return Cochain(self.grid, self.degree, self.placement, values)

    def _check_compat(self, other):
        if (self.degree, self.placement) != (other.degree, other.placement):
            raise ValueError("cochain degree/placement mismatch")

    def __add__(self, other):
        self._check_compat(other)
        return self._like(self.values + other.values)

    def __sub__(self, other):
        self._check_compat(other)
        return self._like(self.values - other.values)

    def __mul__(self, scalar):
        return self._like(self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self):
        return self._like(-self.values)


def zeros(grid, degree, placement=PRIMAL):
    return Cochain(grid, degree, placement, np.zeros(grid.n_cells(degree, placement)))


@dataclass
class BoundaryTrace:
    """Values on boundary (n-1)-cells in the grid's canonical order.

    Values are stored orientation-neutral; `integrate_boundary` and the
    boundary pairings apply the induced Stokes orientation signs.
    """

    grid: object
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.n_boundary_cells,):
            raise ValueError("boundary trace length mismatch")

    @property
    def empty(self):
        return self.values.size == 0


def empty_trace(grid):
    return BoundaryTrace(grid, np.zeros(grid.n_boundary_cells))


@dataclass
class VectorSamples:
    """Vector-field samples collocated with 1-cochain entries.

    kind 'tangent': component along each primal edge (from a primal
    1-cochain); kind 'normal': component along each dual edge (from a dual
    1-cochain).  sharp/flat are exact mutual inverses on these samples.
    """

    grid: object
    kind: str
    values: np.ndarray

    def __post_init__(self):
        if self.kind not in ("tangent", "normal"):
            raise ValueError(f"bad sample kind {self.kind!r}")
        self.values = np.asarray(self.values, dtype=float)
        n = self.grid.n_cells(1 if self.kind == "tangent" else self.grid.dim - 1, PRIMAL)
        if self.values.shape != (n,):
            raise ValueError("vector sample length mismatch")
