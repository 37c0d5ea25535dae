"""Motif detection: fixed-length cycles, cycles with a glued triangle, and
classification of the components of a vertex neighborhood.

``CtPlus(t)`` is the graph obtained from a t-cycle and a triangle by
identifying one edge: a t-cycle c1..ct plus an apex vertex adjacent to
the consecutive pair c1, c2.  These are the forbidden subgraphs of the
extremal problems in this package, so detection returns re-checkable
witnesses rather than bare booleans.

The classification of neighborhood components follows the structure
forced inside N(u) when the host graph has no CtPlus(5): each component
is a star, a double star, a star with one extra edge between leaves, or
a graph on four vertices spanned by a 4-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, _bits


@dataclass(frozen=True)
class MotifWitness:
    """A located motif; ``vertices`` lists the cycle in order, then any apex."""

    kind: str
    t: int
    vertices: tuple

    def verify(self, g):
        """Re-check the witness against ``g`` by direct adjacency lookups."""
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if self.kind in ("C3", "C4", "Ct"):
            cyc = vs
            if len(cyc) != self.t:
                return False
        elif self.kind == "CtPlus":
            if len(vs) != self.t + 1:
                return False
            cyc, apex = vs[:-1], vs[-1]
            if not (g.has_edge(apex, cyc[0]) and g.has_edge(apex, cyc[1])):
                return False
        else:
            return False
        if len(cyc) < 3:
            return False
        for a, b in zip(cyc, cyc[1:]):
            if not g.has_edge(a, b):
                return False
        return g.has_edge(cyc[-1], cyc[0])

    def to_json(self):
        return {"kind": self.kind, "t": self.t, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class ComponentClass:
    """Classification tag for one component of an induced neighborhood.

    Tags and parameters:
      Star(r)        star with r leaves (r = 0 is a single vertex)
      DoubleStar(a,b) two adjacent centers carrying a and b leaves, a <= b
      S1(r)          star with r leaves plus one edge between two leaves
      C4Spanning(s)  four vertices spanned by a 4-cycle; s in C4/C3Plus/K4
      Other          anything else
    """

    tag: str
    params: tuple = ()

    def to_json(self):
        return {"tag": self.tag, "params": list(self.params)}


# ---------------------------------------------------------------------------
# row-level detectors (shared with the enumerator, which works on raw masks)
# ---------------------------------------------------------------------------


def _c3_rows(rows):
    for v, row in enumerate(rows):
        high = row >> (v + 1)
        for off in _bits(high):
            u = v + 1 + off
            common = row & rows[u]
            if common:
                w = (common & -common).bit_length() - 1
                return (v, u, w)
    return None


def _c4_rows(rows):
    n = len(rows)
    for u in range(n):
        if rows[u].bit_count() < 2:
            continue
        for v in range(u + 1, n):
            common = rows[u] & rows[v]
            if common.bit_count() >= 2:
                w1 = (common & -common).bit_length() - 1
                rest = common & (common - 1)
                w2 = (rest & -rest).bit_length() - 1
                return (u, w1, v, w2)
    return None


def _cycle_rows(rows, t):
    """A t-cycle as an ordered vertex tuple, anchored at its least vertex."""
    n = len(rows)
    if t > n:
        return None
    if t == 3:
        return _c3_rows(rows)
    if t == 4:
        return _c4_rows(rows)
    for anchor in range(n):
        found = _cycle_dfs(rows, anchor, t)
        if found:
            return found
    return None


def _cycle_dfs(rows, anchor, t):
    allowed = ~((1 << anchor) - 1)
    target = rows[anchor]
    stack = [(anchor, 1 << anchor, (anchor,))]
    while stack:
        v, used, path = stack.pop()
        if len(path) == t:
            if target & (1 << v):
                return path
            continue
        options = rows[v] & allowed & ~used
        for u in _bits(options):
            stack.append((u, used | (1 << u), path + (u,)))
    return None


def _ct_plus_rows(rows, t):
    """A t-cycle plus an apex on two consecutive cycle vertices, or None.

    Returns (c1, ..., ct, apex) with the apex adjacent to c1 and c2.
    """
    n = len(rows)
    if t + 1 > n:
        return None
    for c1 in range(n):
        for c2 in _bits(rows[c1]):
            common = rows[c1] & rows[c2]
            if not common:
                continue
            for w in _bits(common):
                path = _path_between(rows, c2, c1, t - 1, 1 << w)
                if path is not None:
                    # path runs c2..c1 inclusive; rotate so the cycle starts c1, c2
                    cyc = (c1,) + path[:-1]
                    return cyc + (w,)
    return None


def _path_between(rows, src, dst, length, banned):
    """A path src..dst with ``length`` edges avoiding ``banned`` vertices."""
    if length == 0:
        return (src,) if src == dst and not banned & (1 << src) else None
    stack = [(src, (1 << src) | banned, (src,))]
    while stack:
        v, used, path = stack.pop()
        remaining = length - (len(path) - 1)
        if remaining == 1:
            if rows[v] & (1 << dst) and not used & (1 << dst):
                return path + (dst,)
            continue
        for u in _bits(rows[v] & ~used & ~(1 << dst)):
            stack.append((u, used | (1 << u), path + (u,)))
    return None


def _c4_plus_rows(rows):
    """Fast detector for the 4-cycle with a glued triangle (5 vertices, 6 edges)."""
    n = len(rows)
    for c1 in range(n):
        row1 = rows[c1]
        high = row1 >> (c1 + 1)
        for off in _bits(high):
            c2 = c1 + 1 + off
            common = row1 & rows[c2]
            if not common:
                continue
            for w in _bits(common):
                drop = (1 << w) | (1 << c1) | (1 << c2)
                a_side = row1 & ~drop
                b_side = rows[c2] & ~drop
                if not a_side or not b_side:
                    continue
                for x in _bits(a_side):
                    y_mask = rows[x] & b_side & ~(1 << x)
                    if y_mask:
                        y = (y_mask & -y_mask).bit_length() - 1
                        # cycle starts with the pair carrying the apex
                        return (c1, c2, y, x, w)
    return None


# ---------------------------------------------------------------------------
# public detectors
# ---------------------------------------------------------------------------


def contains_cycle(g, t):
    """Witness for a cycle of length exactly ``t``, or None.

    ``t`` must be at least 3; values above ``g.n`` simply return None.
    """
    t = int(t)
    if t < 3:
        raise GraphError(f"cycle length must be at least 3, got {t}")
    found = _cycle_rows(g.rows, t)
    if found is None:
        return None
    kind = "C3" if t == 3 else ("C4" if t == 4 else "Ct")
    return MotifWitness(kind, t, tuple(found))


def contains_ct_plus(g, t):
    """Witness for a t-cycle sharing an edge with a triangle, or None."""
    t = int(t)
    if t < 3:
        raise GraphError(f"cycle length must be at least 3, got {t}")
    if t == 4:
        found = _c4_plus_rows(g.rows)
    else:
        found = _ct_plus_rows(g.rows, t)
    if found is None:
        return None
    return MotifWitness("CtPlus", t, tuple(found))


def classify_neighborhood_components(g, u):
    """Classify every component of the subgraph induced on N(u).

    Returns a tuple of ``(vertices, ComponentClass)`` pairs ordered by
    least vertex.  Tie-breaking between overlapping shapes follows the
    order Star, DoubleStar, S1, C4Spanning: a lone edge is Star(1) and a
    triangle is S1(2).
    """
    nbrs = g.neighbors(u)
    sub = g.subgraph(nbrs)
    out = []
    for comp in sub.components():
        local = sub.subgraph(comp)
        original = tuple(nbrs[v] for v in comp)
        out.append((original, _classify(local)))
    return tuple(out)


def _classify(h):
    k = h.n
    m = h.m
    degs = sorted((h.degree(v) for v in range(k)), reverse=True)
    if k == 1:
        return ComponentClass("Star", (0,))
    if m == k - 1:
        # connected tree component
        if degs[0] == k - 1:
            return ComponentClass("Star", (k - 1,))
        internal = [v for v in range(k) if h.degree(v) >= 2]
        if len(internal) == 2 and h.has_edge(*internal):
            a, b = sorted(h.degree(v) - 1 for v in internal)
            return ComponentClass("DoubleStar", (a, b))
        return ComponentClass("Other")
    if m == k:
        # unicyclic: a star plus one edge between leaves has a dominating center
        centers = [v for v in range(k) if h.degree(v) == k - 1]
        for c in centers:
            off_center = m - h.degree(c)
            if off_center == 1:
                return ComponentClass("S1", (k - 1,))
    if k == 4 and _c4_rows(h.rows) is not None:
        sub = {4: "C4", 5: "C3Plus", 6: "K4"}.get(m)
        if sub is not None:
            return ComponentClass("C4Spanning", (sub,))
    return ComponentClass("Other")
