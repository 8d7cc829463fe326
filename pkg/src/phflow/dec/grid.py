"""Structured cell complexes (1D intervals, 2D rectangles) with metric data.

The grid owns the combinatorics (cell counts, incidence orientation) and the
metric weights used by the diagonal Hodge star.  Orientation conventions:

* 1D: cells (edges) point +x; the boundary carries sign -1 at the left
  endpoint and +1 at the right.
* 2D: x-edges point +x, y-edges point +y, faces are counterclockwise.
  Dual edges are primal tangents rotated by +90 deg (x-edge -> +y,
  y-edge -> -x).  The induced boundary orientation is counterclockwise:
  bottom/right edges carry +1, top/left edges -1.

Dual k-cells are in bijection with primal (n-k)-cells, so a dual k-cochain
is stored as one value per primal (n-k)-cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Grid:
    dim: int
    sizes: tuple
    lengths: tuple
    periodic: tuple
    metric_scale: np.ndarray  # per-cell, 1D only (ones in 2D)
    sigma: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma", (-1) ** (self.dim - 1))

    # -- combinatorics -------------------------------------------------

    @property
    def n(self):
        return self.dim

    def n_cells(self, degree, placement="primal"):
        """Number of k-cells holding a cochain of this degree/placement."""
        if placement == "dual":
            degree = self.dim - degree
        if self.dim == 1:
            return (self.n_vertices, self.sizes[0])[degree]
        nx, ny = self.sizes
        if degree == 0:
            return self.nvx * self.nvy
        if degree == 1:
            return self.n_xedges + self.n_yedges
        return nx * ny

    # 1D helpers -------------------------------------------------------

    @property
    def n_vertices(self):
        if self.dim == 1:
            return self.sizes[0] if self.periodic[0] else self.sizes[0] + 1
        return self.nvx * self.nvy

    # 2D helpers -------------------------------------------------------

    @property
    def nvx(self):
        return self.sizes[0] if self.periodic[0] else self.sizes[0] + 1

    @property
    def nvy(self):
        return self.sizes[1] if self.periodic[1] else self.sizes[1] + 1

    @property
    def n_xedges(self):
        return self.sizes[0] * self.nvy

    @property
    def n_yedges(self):
        return self.sizes[1] * self.nvx

    def xe(self, values):
        """View the x-edge block of a 1-cochain value array, shape (nvy, Nx)."""
        return values[: self.n_xedges].reshape(self.nvy, self.sizes[0])

    def ye(self, values):
        """View the y-edge block, shape (Ny, nvx)."""
        return values[self.n_xedges :].reshape(self.sizes[1], self.nvx)

    def pack_edges(self, xe, ye):
        return np.concatenate([np.ravel(xe), np.ravel(ye)])

    def faces(self, values):
        return values.reshape(self.sizes[1], self.sizes[0])

    def verts(self, values):
        return values.reshape(self.nvy, self.nvx)

    # -- metric data (built once) ---------------------------------------

    @property
    def spacings(self):
        return tuple(L / N for L, N in zip(self.lengths, self.sizes))

    @property
    def cell_volumes(self):
        """Riemannian volume of each top cell (1D: metric length)."""
        return self._vols

    @property
    def hodge_weights(self):
        """Diagonal weights w_k (primal k -> dual n-k), list indexed by k."""
        return self._weights

    @property
    def boundary_signs(self):
        """Induced orientation sign per boundary (n-1)-cell (canonical order)."""
        return self._bsigns

    @property
    def n_boundary_cells(self):
        return self._bsigns.size


def build_grid(dim, sizes, lengths, periodic, metric_scale=None):
    """Construct a Grid and precompute Hodge weights and volumes.

    metric_scale: per-cell positive factor g (1D only); the metric length of
    cell i is sqrt(g_i) * h.  Must be uniformly 1 in 2D.
    """
    if dim not in (1, 2):
        raise ValueError(f"dim must be 1 or 2, got {dim}")
    sizes = tuple(int(s) for s in np.atleast_1d(sizes))
    lengths = tuple(float(x) for x in np.atleast_1d(lengths))
    periodic = tuple(bool(p) for p in np.atleast_1d(periodic))
    if len(sizes) != dim or len(lengths) != dim or len(periodic) != dim:
        raise ValueError("sizes, lengths, periodic must each have one entry per axis")
    if any(s < 2 for s in sizes):
        raise ValueError("at least 2 cells per axis")
    if any(L <= 0 for L in lengths):
        raise ValueError("lengths must be positive")

    n_cells_top = int(np.prod(sizes))
    if metric_scale is None:
        g = np.ones(n_cells_top)
    else:
        g = np.broadcast_to(np.asarray(metric_scale, dtype=float), (n_cells_top,)).copy()
    if np.any(g <= 0):
        raise ValueError("metric_scale must be positive")
    if dim == 2 and not np.all(g == 1.0):
        raise ValueError("metric_scale other than 1 is not supported in 2D")

    grid = Grid(dim, sizes, lengths, periodic, g)
    if dim == 1:
        _init_1d(grid)
    else:
        _init_2d(grid)
    return grid


def _init_1d(grid):
    N = grid.sizes[0]
    h = grid.lengths[0] / N
    ell = np.sqrt(grid.metric_scale) * h  # metric cell lengths
    nv = grid.n_vertices
    dual = np.empty(nv)
    if grid.periodic[0]:
        dual[:] = 0.5 * (ell + np.roll(ell, 1))
    else:
        dual[1:-1] = 0.5 * (ell[:-1] + ell[1:])
        dual[0] = 0.5 * ell[0]
        dual[-1] = 0.5 * ell[-1]
    object.__setattr__(grid, "_vols", ell)
    # w_0: primal vertex -> dual cell (metric dual length)
    # w_1: primal cell -> dual vertex (1 / metric length)
    object.__setattr__(grid, "_weights", [dual, 1.0 / ell])
    # coordinate dual lengths and vertex-collocated metric factor
    dual_coord = np.empty(nv)
    g = grid.metric_scale
    gv = np.empty(nv)
    if grid.periodic[0]:
        dual_coord[:] = h
        gv[:] = 0.5 * (g + np.roll(g, 1))
    else:
        dual_coord[1:-1] = h
        dual_coord[0] = dual_coord[-1] = h / 2
        gv[1:-1] = 0.5 * (g[:-1] + g[1:])
        gv[0], gv[-1] = g[0], g[-1]
    object.__setattr__(grid, "_dual_coord", dual_coord)
    object.__setattr__(grid, "_g_vertex", gv)
    if grid.periodic[0]:
        bsigns = np.zeros(0)
    else:
        bsigns = np.array([-1.0, 1.0])  # [left, right]
    object.__setattr__(grid, "_bsigns", bsigns)


def _init_2d(grid):
    nx, ny = grid.sizes
    hx, hy = grid.spacings
    px, py = grid.periodic
    nvx, nvy = grid.nvx, grid.nvy

    vols = np.full(nx * ny, hx * hy)

    # dual lengths transverse to each edge family (halved on walls)
    dual_y = np.full(nvy, hy)  # across x-edges, per vertex-row
    if not py:
        dual_y[0] = dual_y[-1] = hy / 2
    dual_x = np.full(nvx, hx)  # across y-edges, per vertex-column
    if not px:
        dual_x[0] = dual_x[-1] = hx / 2

    w1x = np.broadcast_to((dual_y / hx)[:, None], (nvy, nx)).copy()
    w1y = np.broadcast_to((dual_x / hy)[None, :], (ny, nvx)).copy()
    w1 = grid.pack_edges(w1x, w1y)

    # dual areas per vertex
    w0 = np.outer(dual_y, dual_x).ravel()
    w2 = 1.0 / vols

    object.__setattr__(grid, "_vols", vols)
    object.__setattr__(grid, "_weights", [w0, w1, w2])

    # canonical boundary order: bottom, top, left, right (existing walls only)
    signs = []
    if not py:
        signs.append(np.full(nx, 1.0))   # bottom x-edges, +x = induced ccw
        signs.append(np.full(nx, -1.0))  # top x-edges
    if not px:
        signs.append(np.full(ny, -1.0))  # left y-edges
        signs.append(np.full(ny, 1.0))   # right y-edges
    bsigns = np.concatenate(signs) if signs else np.zeros(0)
    object.__setattr__(grid, "_bsigns", bsigns)


def boundary_edge_blocks(grid):
    """Wall labels in canonical boundary order, e.g. ['bottom','top','left','right']."""
    blocks = []
    if grid.dim == 1:
        if not grid.periodic[0]:
            blocks = ["left", "right"]
        return blocks
    if not grid.periodic[1]:
        blocks += ["bottom", "top"]
    if not grid.periodic[0]:
        blocks += ["left", "right"]
    return blocks
