"""Immutable simple graphs on small vertex sets, with neighborhood strata.

Adjacency is stored as one integer bitmask per vertex, which keeps the
hot operations (degree counts into a set, edge cuts, stratification of a
neighborhood by internal degree) down to ands and popcounts.  Graphs are
value objects: mutating operations return new graphs.

The vertex-count cap guards against accidentally feeding a huge graph to
the exact machinery; callers that legitimately need more room (large
family instances, a raised CLI limit) pass ``max_vertices`` explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` points at the offending byte."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A size cap was exceeded; raise the cap explicitly to proceed."""


def _as_mask(vertices, n):
    """Bitmask for an iterable of vertex indices (or pass a mask through)."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> n:
            raise GraphError(f"vertex mask {vertices:#x} outside 0..{n - 1}")
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class NeighborhoodStrata:
    """Partition of a graph around a center vertex u.

    ``closed`` is N[u]; ``n0`` and ``n1`` are the neighbors with 0 and 1
    neighbors inside N(u); ``n2`` is the second neighborhood (vertices at
    distance exactly two); ``w`` is everything outside N[u].  ``ni(i)``
    returns the neighbors with exactly i neighbors inside N(u), and
    ``nplus`` the neighbors with at least one.
    """

    center: int
    closed: tuple
    n0: tuple
    n1: tuple
    n2: tuple
    w: tuple
    _by_degree: tuple

    def ni(self, i):
        for deg, verts in self._by_degree:
            if deg == i:
                return verts
        return ()

    @property
    def nplus(self):
        out = []
        for deg, verts in self._by_degree:
            if deg >= 1:
                out.extend(verts)
        return tuple(sorted(out))

    @property
    def neighbors(self):
        return tuple(v for v in self.closed if v != self.center)

    def to_json(self):
        return {
            "center": self.center,
            "closed": list(self.closed),
            "n0": list(self.n0),
            "n1": list(self.n1),
            "n2": list(self.n2),
            "w": list(self.w),
            "by_degree": {str(d): list(vs) for d, vs in self._by_degree},
        }


@dataclass(frozen=True)
class EdgeCut:
    """Count of edges with one endpoint in ``s`` and the other in ``t``."""

    s: tuple
    t: tuple
    count: int


@dataclass(frozen=True)
class BipartiteResult:
    """Two-coloring when bipartite, otherwise an odd cycle as witness."""

    bipartite: bool
    coloring: tuple | None
    odd_cycle: tuple | None


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, rows, *, max_vertices=None, _validated=False):
        rows = tuple(rows)
        n = len(rows)
        cap = DEFAULT_MAX_VERTICES if max_vertices is None else max_vertices
        if n > cap:
            raise ResourceLimitError(
                f"graph on {n} vertices exceeds the cap of {cap}; pass max_vertices to allow it"
            )
        if not _validated:
            for v, row in enumerate(rows):
                if row >> n:
                    raise GraphError(f"row {v} references vertices outside 0..{n - 1}")
                if row & (1 << v):
                    raise GraphError(f"self-loop at vertex {v}")
                for u in _bits(row):
                    if not rows[u] & (1 << v):
                        raise GraphError(f"adjacency not symmetric between {u} and {v}")
        self._n = n
        self._rows = rows
        self._m = sum(row.bit_count() for row in rows) // 2

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, edges, n=None, *, max_vertices=None):
        edges = [(int(u), int(v)) for u, v in edges]
        if n is None:
            n = max((max(u, v) for u, v in edges), default=-1) + 1
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if rows[u] & (1 << v):
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, max_vertices=max_vertices, _validated=True)

    @classmethod
    def empty(cls, n, *, max_vertices=None):
        return cls([0] * n, max_vertices=max_vertices, _validated=True)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def rows(self):
        return self._rows

    @property
    def vertices(self):
        return range(self._n)

    def degree(self, v):
        return self._rows[v].bit_count()

    def neighbors_mask(self, v):
        return self._rows[v]

    def neighbors(self, v):
        return tuple(_bits(self._rows[v]))

    def has_edge(self, u, v):
        return bool(self._rows[u] & (1 << v))

    def edges(self):
        out = []
        for v in range(self._n):
            row = self._rows[v] >> (v + 1)
            base = v + 1
            for off in _bits(row):
                out.append((v, base + off))
        return tuple(out)

    def degree_sequence(self):
        return tuple(sorted((r.bit_count() for r in self._rows), reverse=True))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Graph(n={self._n}, m={self._m})"

    # -- builders ----------------------------------------------------------

    def add_edge(self, u, v, *, max_vertices=None):
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        grow = max(u, v) + 1
        cap = max_vertices if max_vertices is not None else max(DEFAULT_MAX_VERTICES, self._n)
        rows = list(self._rows) + [0] * max(0, grow - self._n)
        if u < self._n and v < self._n and rows[u] & (1 << v):
            raise GraphError(f"edge ({u}, {v}) already present")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(rows, max_vertices=max(cap, grow), _validated=True)

    def remove_edge(self, u, v):
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(rows, max_vertices=self._n, _validated=True)

    def relabel(self, perm):
        """New graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self._n
        for v in range(self._n):
            acc = 0
            for u in _bits(self._rows[v]):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph(rows, max_vertices=self._n, _validated=True)

    def subgraph(self, vertices):
        """Induced subgraph, relabeled to 0..k-1 in sorted vertex order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        for v in verts:
            if not 0 <= v < self._n:
                raise GraphError(f"vertex {v} outside 0..{self._n - 1}")
        rows = [0] * len(verts)
        for v in verts:
            for u in _bits(self._rows[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(rows, max_vertices=max(DEFAULT_MAX_VERTICES, len(verts)), _validated=True)

    def union(self, other):
        """Disjoint union; the second graph's vertices are shifted up."""
        n = self._n + other._n
        rows = list(self._rows) + [row << self._n for row in other._rows]
        return Graph(rows, max_vertices=max(DEFAULT_MAX_VERTICES, n), _validated=True)

    def drop_isolated(self):
        keep = [v for v in range(self._n) if self._rows[v]]
        return self.subgraph(keep)

    # -- counting ----------------------------------------------------------

    def degree_in(self, v, s):
        """Number of neighbors of ``v`` inside the vertex set ``s``."""
        return (self._rows[v] & _as_mask(s, self._n)).bit_count()

    def edge_count(self, s, t):
        """Number of edges with one endpoint in ``s`` and the other in ``t``.

        The sets may overlap; an edge inside the intersection is counted
        once.  ``edge_count(s, s)`` is the number of edges inside ``s``.
        """
        ms = _as_mask(s, self._n)
        mt = _as_mask(t, self._n)
        ordered = sum((self._rows[v] & mt).bit_count() for v in _bits(ms))
        both = ms & mt
        inside = sum((self._rows[v] & both).bit_count() for v in _bits(both)) // 2
        return ordered - inside

    def edge_cut(self, s, t):
        s_t = tuple(sorted(set(s))) if not isinstance(s, int) else tuple(_bits(s))
        t_t = tuple(sorted(set(t))) if not isinstance(t, int) else tuple(_bits(t))
        return EdgeCut(s_t, t_t, self.edge_count(s, t))

    # -- strata ------------------------------------------------------------

    def strata(self, u):
        """Stratify the graph around ``u`` by degree inside N(u) and distance."""
        if not 0 <= u < self._n:
            raise GraphError(f"vertex {u} outside 0..{self._n - 1}")
        nbrs = self._rows[u]
        closed = nbrs | (1 << u)
        by_degree = {}
        for v in _bits(nbrs):
            d = (self._rows[v] & nbrs).bit_count()
            by_degree.setdefault(d, []).append(v)
        reach2 = 0
        for v in _bits(nbrs):
            reach2 |= self._rows[v]
        n2 = reach2 & ~closed
        w = ((1 << self._n) - 1) & ~closed
        return NeighborhoodStrata(
            center=u,
            closed=tuple(_bits(closed)),
            n0=tuple(by_degree.get(0, ())),
            n1=tuple(by_degree.get(1, ())),
            n2=tuple(_bits(n2)),
            w=tuple(_bits(w)),
            _by_degree=tuple(sorted((d, tuple(vs)) for d, vs in by_degree.items())),
        )

    # -- connectivity ------------------------------------------------------

    def components(self):
        """Vertex sets of the connected components, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self._n):
            if seen & (1 << v):
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for w in _bits(frontier):
                    nxt |= self._rows[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(tuple(_bits(comp)))
        return tuple(out)

    def is_connected(self):
        return len(self.components()) <= 1

    def bipartition(self):
        """Two-coloring, or an odd cycle when none exists.

        The odd cycle is returned as a vertex tuple with consecutive
        entries adjacent and the last adjacent to the first.
        """
        color = [-1] * self._n
        parent = [-1] * self._n
        for start in range(self._n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in _bits(self._rows[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        parent[u] = v
                        queue.append(u)
                    elif color[u] == color[v]:
                        cycle = self._odd_cycle(parent, v, u)
                        return BipartiteResult(False, None, cycle)
        return BipartiteResult(True, tuple(color), None)

    def _odd_cycle(self, parent, v, u):
        path_v, path_u = [v], [u]
        anc_v = {v}
        x = v
        while parent[x] != -1:
            x = parent[x]
            path_v.append(x)
            anc_v.add(x)
        x = u
        while x not in anc_v:
            x = parent[x]
            path_u.append(x)
        meet = x
        cycle = path_v[: path_v.index(meet) + 1]
        cycle.extend(reversed(path_u[: path_u.index(meet)]))
        return tuple(cycle)

    def is_bipartite(self):
        return self.bipartition().bipartite

    def cut_vertices(self):
        """Articulation vertices via iterative depth-first lowlinks."""
        n = self._n
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        is_cut = [False] * n
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            root_children = 0
            stack = [(root, iter(_bits(self._rows[root])))]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for u in it:
                    if disc[u] == -1:
                        parent[u] = v
                        disc[u] = low[u] = timer
                        timer += 1
                        if v == root:
                            root_children += 1
                        stack.append((u, iter(_bits(self._rows[u]))))
                        advanced = True
                        break
                    elif u != parent[v]:
                        low[v] = min(low[v], disc[u])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        is_cut[p] = True
            if root_children >= 2:
                is_cut[root] = True
        return tuple(v for v in range(n) if is_cut[v])


# ---------------------------------------------------------------------------
# graph6 encoding
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def graph6_encode(g):
    """Encode a graph in graph6 format (bare string, no header)."""
    n = g.n
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        raise Graph6Error(f"vertex count {n} too large for graph6")
    bits = []
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    body = []
    for pos in range(0, len(bits), 6):
        chunk = bits[pos : pos + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def graph6_decode(text, *, max_vertices=None):
    """Decode graph6 text into a :class:`Graph`.

    Accepts an optional ``>>graph6<<`` header and trailing whitespace.
    Malformed input raises :class:`Graph6Error` carrying the byte offset
    of the first offending character.
    """
    if not isinstance(text, str):
        raise Graph6Error("graph6 input must be a string")
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        text = text[base:]
    stripped = text.rstrip("\r\n \t")
    if not stripped:
        raise Graph6Error("empty graph6 string", offset=base)
    for i, ch in enumerate(stripped):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", offset=base + i)
    pos = 0
    if ord(stripped[0]) == 126:
        if len(stripped) >= 2 and ord(stripped[1]) == 126:
            raise Graph6Error("graph6 vertex counts above 258047 are unsupported", offset=base)
        if len(stripped) < 4:
            raise Graph6Error("truncated graph6 vertex count", offset=base + len(stripped))
        n = 0
        for ch in stripped[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(stripped[0]) - 63
        pos = 1
    cap = DEFAULT_MAX_VERTICES if max_vertices is None else max_vertices
    if n > cap:
        raise ResourceLimitError(
            f"graph6 input has {n} vertices, over the cap of {cap}; raise max_vertices to allow it"
        )
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = stripped[pos:]
    if len(body) < need_bytes:
        raise Graph6Error(
            f"graph6 body too short: need {need_bytes} bytes, have {len(body)}",
            offset=base + len(stripped),
        )
    if len(body) > need_bytes:
        raise Graph6Error("unexpected bytes after graph6 body", offset=base + pos + need_bytes)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[idx // 6]) - 63
            bit = (byte >> (5 - idx % 6)) & 1
            idx += 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if need_bytes:
        tail = ord(body[-1]) - 63
        used = need_bits - 6 * (need_bytes - 1)
        if used < 6 and tail & ((1 << (6 - used)) - 1):
            raise Graph6Error("nonzero padding bits in graph6 body", offset=base + pos + need_bytes - 1)
    return Graph(rows, max_vertices=cap, _validated=True)
