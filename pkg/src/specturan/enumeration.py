"""Isomorphism-free enumeration of graphs by edge count.

Generation follows the canonical-augmentation scheme: a graph with m
edges is grown from its unique parent, obtained by deleting the
canonically-last edge and dropping the vertices that become isolated.
A child produced by an augmentation move is accepted only when undoing
its own canonical edge reproduces the parent, so every isomorphism
class with the target edge count is visited exactly once, with no
global seen-set.

The canonical labeling is color refinement (degree and neighbor-cell
signatures) plus individualization backtracking with twin-class and
automorphism-orbit pruning, taking the lexicographically largest
relabeled adjacency as the certificate.  No isolated vertices ever
appear: moves add an edge between existing vertices, a pendant, or a
fresh disjoint edge.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import intpoly as ip
from . import motifs
from .graphs import Graph, GraphError, ResourceLimitError, graph6_decode, graph6_encode
from .spectral import SpectralResult, char_poly, compare_rho, spectral_radius

FILTER_FLAGS = frozenset(
    {"C3Free", "C4Free", "C4PlusFree", "C5PlusFree", "NonBipartite", "Connected"}
)
SOFT_CAP = 14
HARD_CAP = 18

_FLAG_ALIASES = {name.lower(): name for name in FILTER_FLAGS}


class EmptyFamilyError(ValueError):
    """No graph satisfies the filter at this edge count."""


@dataclass(frozen=True)
class EnumFilter:
    """Target edge count plus a conjunction of pure predicates.

    Flags: C3Free, C4Free, C4PlusFree, C5PlusFree (monotone, pruned
    during growth), NonBipartite, Connected (checked at the target
    edge count only, since both can still change while growing).
    """

    m: int
    flags: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise ValueError(f"edge target m must be a positive integer, got {self.m!r}")
        flags = frozenset(self.flags)
        unknown = flags - FILTER_FLAGS
        if unknown:
            known = ", ".join(sorted(FILTER_FLAGS))
            raise ValueError(
                f"unknown filter flag(s) {sorted(unknown)}; known flags: {known}"
            )
        object.__setattr__(self, "flags", flags)

    @classmethod
    def parse(cls, m, spec):
        """Build from a comma-separated, case-insensitive flag list."""
        flags = set()
        for token in (spec or "").split(","):
            token = token.strip().lower()
            if not token:
                continue
            if token not in _FLAG_ALIASES:
                known = ", ".join(sorted(_FLAG_ALIASES))
                raise ValueError(f"unknown filter flag {token!r}; known: {known}")
            flags.add(_FLAG_ALIASES[token])
        return cls(m=m, flags=frozenset(flags))

    def monotone_ok(self, g):
        """True when g avoids every flagged monotone motif."""
        if "C3Free" in self.flags and motifs.contains_cycle(g, 3) is not None:
            return False
        if "C4Free" in self.flags and motifs.contains_cycle(g, 4) is not None:
            return False
        if "C4PlusFree" in self.flags and motifs.contains_ct_plus(g, 4) is not None:
            return False
        if "C5PlusFree" in self.flags and motifs.contains_ct_plus(g, 5) is not None:
            return False
        return True

    def passes(self, g):
        """Full post-hoc predicate at the target edge count."""
        if g.m != self.m:
            return False
        if not self.monotone_ok(g):
            return False
        if "NonBipartite" in self.flags and g.is_bipartite():
            return False
        if "Connected" in self.flags and not g.is_connected():
            return False
        return True

    def cache_key(self):
        tail = "-".join(sorted(self.flags)) if self.flags else "none"
        return f"m{self.m}-{tail}"

    def to_json(self):
        return {"m": self.m, "flags": sorted(self.flags)}


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


def _refine_cells(rows, cells):
    # ordered partition refinement; sub-cells ordered by signature descending
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                row = rows[v]
                key = tuple((row & mk).bit_count() for mk in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig, reverse=True):
                new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _canon_component(rows, comp):
    # returns (order, key, gens): order maps canonical position -> original
    # vertex, key is the relabeled adjacency row tuple (lex-max over leaves),
    # gens are automorphisms (dicts) in original labels
    k = len(comp)
    local = {v: i for i, v in enumerate(comp)}
    lrows = [0] * k
    for v in comp:
        r = 0
        for u in comp:
            if rows[v] >> u & 1:
                r |= 1 << local[u]
        lrows[local[v]] = r

    parent_uf = list(range(k))

    def find(a):
        while parent_uf[a] != a:
            parent_uf[a] = parent_uf[parent_uf[a]]
            a = parent_uf[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent_uf[ra] = rb

    gens = []

    # twin seeding: equal open or closed local neighborhoods commute
    twin = {}
    for v in range(k):
        twin.setdefault(("o", lrows[v]), []).append(v)
        twin.setdefault(("c", lrows[v] | (1 << v)), []).append(v)
    for group in twin.values():
        for a, b in zip(group, group[1:]):
            if find(a) != find(b):
                perm = list(range(k))
                perm[a], perm[b] = b, a
                gens.append(perm)
                union(a, b)

    best_key = None
    best_order = None

    def leaf(order):
        nonlocal best_key, best_order
        pos = [0] * k
        for p, v in enumerate(order):
            pos[v] = p
        key = []
        for p in range(k):
            r = 0
            for u in _iter_bits(lrows[order[p]]):
                r |= 1 << pos[u]
            key.append(r)
        key = tuple(key)
        if best_key is None or key > best_key:
            best_key = key
            best_order = tuple(order)
        elif key == best_key:
            perm = [0] * k
            for p in range(k):
                perm[best_order[p]] = order[p]
            gens.append(perm)
            for a in range(k):
                union(a, perm[a])

    def rec(cells):
        cells = _refine_cells(lrows, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried = []
        for v in cell:
            rv = find(v)
            if any(find(t) == rv for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1 :])

    rec([list(range(k))])

    order = tuple(comp[v] for v in best_order)
    out_gens = []
    for perm in gens:
        out_gens.append({comp[a]: comp[perm[a]] for a in range(k)})
    return order, best_key, out_gens


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical certificate: equal cert iff isomorphic."""

    cert: str

    @classmethod
    def of(cls, g):
        return cls(canonical_form(g))


@dataclass
class _CanonData:
    order: tuple  # canonical position -> original vertex
    key: tuple  # canonical adjacency rows (hashable cert)
    gens: list  # automorphism generators, original labels


def _canonical_data(g):
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    pieces = []
    for comp in g.components():
        order, key, gens = _canon_component(rows, list(comp))
        pieces.append((len(comp), _edge_count_of_key(key), key, order, gens))
    # deterministic, isomorphism-invariant component order
    pieces.sort(key=lambda t: (-t[0], -t[1], t[2]))
    order = []
    all_gens = []
    for _, _, _, comp_order, gens in pieces:
        order.extend(comp_order)
        all_gens.extend(gens)
    pos = {v: p for p, v in enumerate(order)}
    key = []
    for p, v in enumerate(order):
        r = 0
        for u in _iter_bits(rows[v]):
            r |= 1 << pos[u]
        key.append(r)
    return _CanonData(tuple(order), tuple(key), all_gens)


def _edge_count_of_key(key):
    return sum(r.bit_count() for r in key) // 2


def canonical_form(g):
    """graph6 string of the canonically relabeled graph."""
    data = _canonical_data(g)
    return _key_to_graph6(data.key)


def _key_to_graph6(key):
    canon = Graph(list(key), max_vertices=max(len(key), 1), _validated=True)
    return graph6_encode(canon)


def _canonical_edge(data):
    # edge whose canonical (min, max) position pair is lexicographically last
    best = None
    best_pair = None
    pos = {v: p for p, v in enumerate(data.order)}
    for p, row in enumerate(data.key):
        for q in _iter_bits(row):
            if q < p:
                continue
            pair = (p, q)
            if best_pair is None or pair > best_pair:
                best_pair = pair
                best = (data.order[p], data.order[q])
    return best


# ---------------------------------------------------------------------------
# augmentation moves
# ---------------------------------------------------------------------------


def _orbit_reps_vertices(n, gens):
    if not gens:
        return list(range(n))
    uf = list(range(n))

    def find(a):
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    for perm in gens:
        for a, b in perm.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                uf[ra] = rb
    reps = {}
    for v in range(n):
        reps.setdefault(find(v), v)
    return sorted(reps.values())


def _orbit_reps_pairs(pairs, gens):
    if not gens:
        return list(pairs)
    pending = set(pairs)
    reps = []
    while pending:
        start = min(pending)
        reps.append(start)
        queue = [start]
        seen = {start}
        while queue:
            cur = queue.pop()
            for perm in gens:
                a, b = perm.get(cur[0], cur[0]), perm.get(cur[1], cur[1])
                nxt = (a, b) if a < b else (b, a)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        pending -= seen
    return reps


def _children_moves(g, gens):
    n = g.n
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
    ]
    internal = _orbit_reps_pairs(non_edges, gens)
    pendants = [(v, n) for v in _orbit_reps_vertices(n, gens)]
    fresh = [(n, n + 1)]
    return internal + pendants + fresh


# ---------------------------------------------------------------------------
# the enumerator
# ---------------------------------------------------------------------------


@dataclass
class _Node:
    graph: Graph
    data: _CanonData


def _root_node():
    g = Graph.from_edges([(0, 1)])
    return _Node(g, _canonical_data(g))


def _expand(node, filt, target, sink):
    # depth-first canonical augmentation below one node
    g = node.graph
    q = g.m
    if q == target:
        if _leaf_ok(g, filt):
            sink(g)
        return
    remaining = target - q
    seen_children = {}
    for u, v in _children_moves(g, node.data.gens):
        child = g.add_edge(u, v)
        if not filt.monotone_ok(child):
            continue
        if "Connected" in filt.flags:
            parts = len(child.components())
            if parts - 1 > target - child.m:
                continue
        data = _canonical_data(child)
        if data.key in seen_children:
            continue
        seen_children[data.key] = True
        if not _parent_check(child, data, node):
            continue
        _expand(_Node(child, data), filt, target, sink)


def _parent_check(child, data, node):
    cu, cv = _canonical_edge(data)
    stripped = child.remove_edge(cu, cv).drop_isolated()
    parent = node.graph
    if stripped.n == parent.n and stripped.degree_sequence() == parent.degree_sequence():
        if stripped == parent:
            return True
        return _canonical_data(stripped).key == node.data.key
    return False


def _leaf_ok(g, filt):
    if "NonBipartite" in filt.flags and g.is_bipartite():
        return False
    if "Connected" in filt.flags and not g.is_connected():
        return False
    return True


def enumerate_graphs(filt, visit=None, *, threads=1, soft_cap=SOFT_CAP):
    """Visit one representative of every isomorphism class passing filt.

    Parameters
    ----------
    filt : EnumFilter
    visit : callable or None
        Called once per class, in a deterministic order that does not
        depend on the thread count.
    threads : int
        Worker threads; subtrees of the augmentation forest are
        processed concurrently and merged in canonical order.
    soft_cap : int
        Refuse targets above this without an explicit override.

    Returns
    -------
    int
        Number of classes visited.
    """
    if not isinstance(filt, EnumFilter):
        raise TypeError("filt must be an EnumFilter")
    m = filt.m
    if m > HARD_CAP:
        raise ResourceLimitError(
            f"enumeration at m={m} exceeds the hard cap of {HARD_CAP} edges"
        )
    if m > soft_cap:
        raise ResourceLimitError(
            f"enumeration at m={m} exceeds the soft cap of {soft_cap} edges; "
            f"pass soft_cap={m} to allow it"
        )
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")

    root = _root_node()
    if not filt.monotone_ok(root.graph):
        return 0
    count = 0

    if m == 1:
        if _leaf_ok(root.graph, filt):
            if visit is not None:
                visit(root.graph)
            count = 1
        return count

    # build a deterministic frontier of subtree roots
    frontier_depth = min(m, 3)
    frontier = []

    def collect(g):
        frontier.append(g)

    frontier_filter = EnumFilter(m=frontier_depth, flags=filt.flags & _MONOTONE)
    _expand(root, frontier_filter, frontier_depth, collect)
    if frontier_depth == m:
        total = 0
        for g in frontier:
            if _leaf_ok(g, filt):
                if visit is not None:
                    visit(g)
                total += 1
        return total

    def run_subtree(g):
        out = []
        _expand(_Node(g, _canonical_data(g)), filt, m, out.append)
        return out

    if threads == 1:
        buffers = [run_subtree(g) for g in frontier]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            buffers = list(pool.map(run_subtree, frontier))
    for buf in buffers:
        for g in buf:
            if visit is not None:
                visit(g)
            count += 1
    return count


_MONOTONE = frozenset({"C3Free", "C4Free", "C4PlusFree", "C5PlusFree"})


# ---------------------------------------------------------------------------
# extremal search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalCertificate:
    """Certified maximizer of the spectral radius over a filtered family."""

    filter: EnumFilter
    graph: Graph
    result: SpectralResult
    ties: tuple
    runners_up: tuple
    count: int

    def to_json(self):
        return {
            "filter": self.filter.to_json(),
            "extremal": graph6_encode(self.graph),
            "canonical": canonical_form(self.graph),
            "rho": self.result.rho,
            "bracket": [str(b) for b in self.result.bracket],
            "ties": list(self.ties),
            "runners_up": [{"graph6": c, "rho": r} for c, r in self.runners_up],
            "count": self.count,
        }


def extremal_rho(filt, *, threads=1, soft_cap=SOFT_CAP, runners=5, tol=None):
    """Certified extremal graph for a filtered family.

    Returns an ExtremalCertificate whose `graph` maximizes rho under
    exact comparison; float-close contenders are separated with the
    certified Sturm machinery, ties are reported as canonical certs.
    """
    scored = []

    def visit(g):
        res_f = _float_rho(g)
        scored.append((res_f, g))

    n = enumerate_graphs(filt, visit, threads=threads, soft_cap=soft_cap)
    if n == 0:
        raise EmptyFamilyError(f"no graph satisfies {filt.to_json()}")
    scored.sort(key=lambda t: -t[0])
    best_f = scored[0][0]
    cohort = [g for f, g in scored if f >= best_f - 1e-7]
    best = cohort[0]
    best_res = spectral_radius(best) if tol is None else spectral_radius(best, tol=tol)
    ties = []
    for g in cohort[1:]:
        cmp = compare_rho(best, g)
        if cmp < 0:
            best, best_res = g, (spectral_radius(g) if tol is None else spectral_radius(g, tol=tol))
            ties = []
        elif cmp == 0:
            ties.append(g)
    tie_certs = tuple(sorted(canonical_form(g) for g in ties))
    runner_list = []
    best_cert = canonical_form(best)
    skip = {best_cert} | set(tie_certs)
    for f, g in scored:
        cert = canonical_form(g)
        if cert in skip:
            continue
        skip.add(cert)
        runner_list.append((graph6_encode(g), f))
        if len(runner_list) >= runners:
            break
    return ExtremalCertificate(
        filter=filt,
        graph=best,
        result=best_res,
        ties=tie_certs,
        runners_up=tuple(runner_list),
        count=n,
    )


def _float_rho(g):
    import numpy as np

    best = 0.0
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub = g.subgraph(comp)
        a = np.zeros((sub.n, sub.n))
        for u, v in sub.edges():
            a[u, v] = a[v, u] = 1.0
        best = max(best, float(np.max(np.linalg.eigvalsh(a))))
    return best


def find_matching_graphs(m, poly, filt=None, *, threads=1, soft_cap=SOFT_CAP):
    """All classes whose characteristic polynomial poly divides exactly.

    poly is an ascending integer coefficient sequence; filt defaults to
    the unfiltered family at m edges.
    """
    coeffs = ip.trim(tuple(poly))
    if filt is None:
        filt = EnumFilter(m=m)
    elif filt.m != m:
        raise ValueError(f"filter targets m={filt.m} but {m} was requested")
    if ip.degree(coeffs) > 2 * m:
        return []
    probe_points = (-2, -1, 1, 2, 3)
    probe_vals = {k: ip.evaluate(coeffs, k) for k in probe_points}
    hits = []

    def visit(g):
        cp = char_poly(g)
        if ip.degree(cp.coeffs) < ip.degree(coeffs):
            return
        for k, pv in probe_vals.items():
            if pv == 0:
                continue
            if cp.evaluate(k) % pv != 0:
                return
        if cp.divisible_by(coeffs):
            hits.append(g)

    enumerate_graphs(filt, visit, threads=threads, soft_cap=soft_cap)
    return hits


# ---------------------------------------------------------------------------
# extremal cache
# ---------------------------------------------------------------------------


def cache_path(cache_dir, filt):
    return os.path.join(cache_dir, f"extremal-{filt.cache_key()}.json")


def save_extremal_cache(cache_dir, cert):
    """Write one JSON record for (m, filter flags)."""
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, cert.filter)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cert.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def load_extremal_cache(cache_dir, filt):
    """Load and re-validate a cached extremal record, or return None.

    The cached cert's rho bracket is recomputed from the stored graph;
    a mismatch discards the cache entry.
    """
    path = cache_path(cache_dir, filt)
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            blob = json.load(fh)
        g = graph6_decode(blob["extremal"])
        res = spectral_radius(g)
        lo, hi = (Fraction(b) for b in blob["bracket"])
        if not (lo <= Fraction(res.rho) <= hi or abs(float(lo) - res.rho) < 1e-8):
            return None
        return blob
    except (OSError, ValueError, KeyError, GraphError):
        return None
