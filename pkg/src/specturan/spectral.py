"""Spectral radius with certified brackets, exact characteristic polynomials,
equitable partitions, and edge rotation.

The certification route avoids trusting floating point anywhere a claim
is made.  For a connected graph the coarsest equitable partition yields
an integer quotient matrix B whose spectrum embeds in the adjacency
spectrum; B is nonnegative, so its largest eigenvalue lifts to a
nonnegative eigenvector of the adjacency matrix, and by Perron-Frobenius
that eigenvalue *is* the spectral radius.  Sturm-chain bisection on the
integer characteristic polynomial of B then brackets the spectral radius
between two rationals to any requested width.  Floating point appears
only in the Perron vector and the convenience ``rho`` value, both of
which are cross-checked against the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import intpoly as ip
from .graphs import Graph, GraphError, _bits

DEFAULT_TOL = 1e-10
_PERRON_RESIDUAL = 1e-8


class RotationError(GraphError):
    """Invalid edge rotation request."""


@dataclass(frozen=True)
class CharPoly:
    """Exact characteristic polynomial det(xI - A), ascending coefficients."""

    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def evaluate(self, x):
        return ip.evaluate(self.coeffs, x)

    def divisible_by(self, other):
        other = other.coeffs if isinstance(other, CharPoly) else tuple(other)
        return ip.divides(other, self.coeffs)

    def to_json(self):
        return {"coeffs": [int(c) for c in self.coeffs], "order": "ascending", "degree": self.degree}


@dataclass(frozen=True)
class QuotientMatrix:
    """Equitable partition with its quotient matrix.

    ``cells`` partition the vertices; ``b[i][j]`` counts the neighbors in
    cell j of any vertex of cell i (well defined by equitability, and
    validated entrywise over every vertex rather than a representative).
    """

    cells: tuple
    b: tuple

    @property
    def size(self):
        return len(self.cells)

    def charpoly(self):
        return ip.charpoly_int(self.b)

    def to_json(self):
        return {
            "cells": [list(c) for c in self.cells],
            "b": [list(row) for row in self.b],
            "charpoly": [int(c) for c in self.charpoly()],
        }


@dataclass(frozen=True)
class SpectralResult:
    """Certified spectral radius of a graph.

    ``bracket`` is a pair of rationals with lo < rho <= hi, certified by
    Sturm bisection on ``poly`` (an exact integer polynomial whose
    largest real root is the spectral radius).  ``perron`` is a unit
    nonnegative eigenvector supported on ``component``, the attaining
    component (lowest-index on exact ties), with residual below 1e-8.
    ``ustar`` is the index of the largest Perron entry (lowest such).
    """

    rho: float
    bracket: tuple
    perron: tuple
    ustar: int
    component: tuple
    poly: tuple

    @property
    def bracket_width(self):
        return self.bracket[1] - self.bracket[0]

    def to_json(self):
        lo, hi = self.bracket
        return {
            "rho": self.rho,
            "bracket": [float(lo), float(hi)],
            "bracket_exact": [str(lo), str(hi)],
            "perron": list(self.perron),
            "ustar": self.ustar,
            "component": list(self.component),
            "poly": [int(c) for c in self.poly],
        }


# ---------------------------------------------------------------------------
# equitable partitions
# ---------------------------------------------------------------------------


def equitable_partition(g, seed=None):
    """Coarsest equitable partition refining ``seed`` (default: one cell).

    Starting from a single cell, the first refinement round separates
    vertices by degree, so the default result is the coarsest equitable
    partition of the graph.  Cells are ordered by descending signature at
    each split, which places hubs ahead of pendants for the families in
    this package.
    """
    n = g.n
    if seed is None:
        cells = [tuple(range(n))] if n else []
    else:
        cells = [tuple(sorted(set(int(v) for v in cell))) for cell in seed]
        cells = [c for c in cells if c]
        flat = [v for c in cells for v in c]
        if sorted(flat) != list(range(n)):
            raise GraphError("seed must partition the vertex set")
    rows = g.rows
    changed = True
    while changed:
        changed = False
        masks = [_mask_of(c) for c in cells]
        new_cells = []
        for cell in cells:
            groups = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups, reverse=True):
                new_cells.append(tuple(groups[sig]))
        cells = new_cells
    masks = [_mask_of(c) for c in cells]
    b = []
    for cell in cells:
        counts = [tuple((rows[v] & m).bit_count() for m in masks) for v in cell]
        if any(c != counts[0] for c in counts[1:]):
            raise GraphError("partition failed the entrywise equitability check")
        b.append(counts[0])
    return QuotientMatrix(tuple(cells), tuple(b))


def _mask_of(cell):
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------


def char_poly(g):
    """Exact characteristic polynomial of the adjacency matrix."""
    coeffs = (1,)
    for comp in g.components():
        sub = g.subgraph(comp)
        coeffs = ip.mul(coeffs, ip.charpoly_adjacency(sub.rows))
    return CharPoly(tuple(int(c) for c in coeffs))


# ---------------------------------------------------------------------------
# spectral radius
# ---------------------------------------------------------------------------


def _dense(g):
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in _bits(g.rows[v]):
            a[v, u] = 1.0
    return a


def _power_iteration(a, residual_target, max_iter=20000):
    """Nonnegative unit eigenvector estimate for the largest eigenvalue.

    Plain iteration from the all-ones vector, switching to the shifted
    matrix A + I when the residual stalls (bipartite components make the
    plain iteration oscillate with period two).  Falls back to a dense
    symmetric eigensolve if both stall.
    """
    n = a.shape[0]
    if n == 1:
        return 0.0, np.ones(1)
    x = np.ones(n) / np.sqrt(n)
    mat = a
    shifted = False
    prev_res = None
    stall = 0
    for _ in range(max_iter):
        y = mat @ x
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            break
        x = y / norm
        ax = a @ x
        rho = float(x @ ax)
        res = float(np.max(np.abs(ax - rho * x)))
        if res <= residual_target:
            return rho, np.maximum(x, 0.0)
        if prev_res is not None and res > 0.5 * prev_res:
            stall += 1
        else:
            stall = 0
        if stall >= 8:
            if not shifted:
                mat = a + np.eye(n)
                shifted = True
                stall = 0
            else:
                break
        prev_res = res
    vals, vecs = np.linalg.eigh(a)
    v = vecs[:, -1]
    if float(np.sum(v)) < 0:
        v = -v
    v = np.maximum(v, 0.0)
    v = v / float(np.linalg.norm(v))
    return float(vals[-1]), v


def spectral_radius(g, tol=DEFAULT_TOL):
    """Certified spectral radius; see :class:`SpectralResult`.

    Exact certification runs on the attaining component's equitable
    quotient polynomial; when several components sit within float noise
    of the top, their quotient polynomials are compared exactly and ties
    resolve to the lowest-index component.
    """
    if g.n == 0:
        raise GraphError("spectral radius of the empty graph is undefined")
    tol_frac = Fraction(tol)
    if tol_frac <= 0:
        raise GraphError("tolerance must be positive")
    comps = g.components()
    infos = []
    for comp in comps:
        sub = g.subgraph(comp)
        if sub.m == 0:
            infos.append((comp, sub, 0.0))
            continue
        a = _dense(sub)
        rho_f = float(np.max(np.abs(np.linalg.eigvalsh(a))))
        infos.append((comp, sub, rho_f))
    best_f = max(info[2] for info in infos)
    cohort = [info for info in infos if info[2] >= best_f - 1e-7]
    best = cohort[0]
    best_poly = _quotient_poly(best[1])
    for info in cohort[1:]:
        poly = _quotient_poly(info[1])
        if ip.compare_largest_roots(poly, best_poly) > 0:
            best, best_poly = info, poly
    comp, sub, _ = best
    bracket = ip.largest_root_bracket(best_poly, tol=tol_frac)
    rho = float(bracket.mid)
    if bracket.lo < 0 <= bracket.hi and sub.m == 0:
        rho = 0.0
    residual_target = min(_PERRON_RESIDUAL / 100.0, float(tol))
    _, vec = _power_iteration(_dense(sub), residual_target)
    perron = np.zeros(g.n)
    for i, v in enumerate(comp):
        perron[v] = vec[i]
    norm = float(np.linalg.norm(perron))
    perron = perron / norm if norm else perron
    top = float(np.max(perron))
    ustar = int(np.nonzero(perron >= top - 1e-12)[0][0])
    return SpectralResult(
        rho=rho,
        bracket=(bracket.lo, bracket.hi),
        perron=tuple(float(x) for x in perron),
        ustar=ustar,
        component=comp,
        poly=best_poly,
    )


def _quotient_poly(sub):
    """Integer polynomial whose largest real root is the component's radius."""
    if sub.m == 0:
        return (0, 1)
    return tuple(int(c) for c in equitable_partition(sub).charpoly())


def compare_rho(g, h, *, results=None):
    """Exact comparison of spectral radii: -1, 0, or +1."""
    rg = results[0] if results else spectral_radius(g)
    rh = results[1] if results else spectral_radius(h)
    return ip.compare_largest_roots(rg.poly, rh.poly)


def compare_rho_to(g, value, *, result=None):
    """Exact comparison of the spectral radius against a rational or surd."""
    r = result if result is not None else spectral_radius(g)
    return ip.compare_root_to(r.poly, value)


def rho_squared_upper_bound(g):
    """Integer bound: the square of the radius is at most the largest
    row sum of A**2, i.e. max over v of the sum of neighbor degrees."""
    best = 0
    for v in range(g.n):
        s = sum(g.degree(u) for u in _bits(g.rows[v]))
        best = max(best, s)
    return best


# ---------------------------------------------------------------------------
# edge rotation
# ---------------------------------------------------------------------------


def rotate_edges(g, v, u, moved):
    """Move the edges ``{v, w}`` to ``{u, w}`` for each w in ``moved``.

    ``moved`` must consist of neighbors of v that are not neighbors of u
    (and differ from u itself); violations raise :class:`RotationError`
    naming the offending vertex.  Rotating toward a vertex with a larger
    Perron entry never decreases the spectral radius.
    """
    n = g.n
    if not (0 <= v < n and 0 <= u < n):
        raise RotationError(f"rotation endpoints {v}, {u} must be vertices")
    if u == v:
        raise RotationError(f"rotation source and target coincide at {v}")
    moved = tuple(int(w) for w in moved)
    out = g
    seen = set()
    for w in moved:
        if not 0 <= w < n:
            raise RotationError(f"moved vertex {w} is not a vertex")
        if w in seen:
            raise RotationError(f"moved vertex {w} listed twice")
        seen.add(w)
        if w == u:
            raise RotationError(f"moved vertex {w} equals the rotation target")
        if w == v:
            raise RotationError(f"moved vertex {w} equals the rotation source")
        if not g.has_edge(v, w):
            raise RotationError(f"moved vertex {w} is not a neighbor of {v}")
        if g.has_edge(u, w):
            raise RotationError(f"moved vertex {w} is already a neighbor of {u}")
    for w in moved:
        out = out.remove_edge(v, w).add_edge(u, w)
    return out
