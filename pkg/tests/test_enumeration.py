"""Exhaustive enumeration: certificates, counts, filters, extremal search."""

import json
import math
import random
from itertools import combinations

import pytest

try:
    from hypothesis import given, settings
    from hypothesis import strategies as st

    HAVE_HYPOTHESIS = True
except ImportError:
    HAVE_HYPOTHESIS = False

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from specturan import intpoly as ip
from specturan.bounds import make_poly
from specturan.enumeration import (
    FILTER_FLAGS,
    HARD_CAP,
    CanonicalForm,
    EmptyFamilyError,
    EnumFilter,
    cache_path,
    canonical_form,
    enumerate_graphs,
    extremal_rho,
    find_matching_graphs,
    load_extremal_cache,
    save_extremal_cache,
)
from specturan.families import build
from specturan.graphs import Graph, ResourceLimitError, graph6_decode, graph6_encode
from specturan.spectral import char_poly, spectral_radius

# one representative of every isomorphism class on at most 7 vertices
ATLAS = graph_atlas_g()


def connected_atlas(max_edges):
    # every connected graph with e <= 6 edges has at most e+1 <= 7 vertices,
    # so the atlas is complete for these classes
    out = []
    for h in ATLAS:
        e = h.number_of_edges()
        if 1 <= e <= max_edges and h.number_of_nodes() >= 1 and nx.is_connected(h):
            out.append((e, Graph.from_edges(h.edges(), n=h.number_of_nodes())))
    return out


def assemble_classes(m):
    # all graphs with m edges and no isolated vertex, as disjoint unions of
    # connected atlas classes; valid for m <= 6
    assert m <= 6
    pieces = connected_atlas(m)
    found = []

    def rec(start, left, acc):
        if left == 0:
            g = acc[0]
            for h in acc[1:]:
                g = g.union(h)
            found.append(g)
            return
        for i in range(start, len(pieces)):
            e, h = pieces[i]
            if e <= left:
                rec(i, left - e, acc + [h])

    rec(0, m, [])
    return found


def count_oracle(max_m):
    # multiset generating function: prod_e (1 - x^e)^(-c_e) where c_e counts
    # connected classes with e edges
    c = {}
    for e, _ in connected_atlas(max_m):
        c[e] = c.get(e, 0) + 1
    series = [1] + [0] * max_m
    for e, ce in c.items():
        for _ in range(ce):
            # multiply by 1/(1-x^e), truncated
            for i in range(e, max_m + 1):
                series[i] += series[i - e]
    return series


def random_graph(rng, n, p):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(edges, n=n)


FROZEN_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68, 7: 177, 8: 497, 9: 1476, 10: 4613}


class TestCanonicalForm:
    def test_atlas_classes_pairwise_distinct(self):
        certs = [canonical_form(g) for _, g in connected_atlas(6)]
        assert len(certs) == len(set(certs))

    def test_relabel_invariance(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(2, 9)
            g = random_graph(rng, n, rng.uniform(0.2, 0.8))
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_component_order_invariance(self):
        a = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
        b = Graph.from_edges([(0, 1), (0, 2), (0, 3)])
        assert canonical_form(a.union(b)) == canonical_form(b.union(a))

    def test_distinguishes_near_isomorphs(self):
        # same degree sequence, different classes
        c6 = Graph.from_edges([(i, (i + 1) % 6) for i in range(6)])
        two_c3 = Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert canonical_form(c6) != canonical_form(two_c3)

    def test_isolated_vertices_matter(self):
        star = Graph.from_edges([(0, 1), (0, 2)])
        padded = Graph.from_edges([(0, 1), (0, 2)], n=4)
        assert canonical_form(star) != canonical_form(padded)

    def test_cert_is_decodable_graph6(self):
        g = build("Sn_k", n=6, k=2)
        cert = canonical_form(g)
        back = graph6_decode(cert)
        assert canonical_form(back) == cert

    def test_dataclass_wrapper(self):
        g = Graph.from_edges([(0, 1), (1, 2)])
        cf = CanonicalForm.of(g)
        assert cf.cert == canonical_form(g)

    if HAVE_HYPOTHESIS:

        @given(st.integers(0, 2**21 - 1), st.randoms())
        @settings(max_examples=60, deadline=None)
        def test_cert_invariance_property(self, mask, pyr):
            # 7-vertex graph from the bitmask of its 21 possible edges
            pairs = list(combinations(range(7), 2))
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            g = Graph.from_edges(edges, n=7)
            perm = list(range(7))
            pyr.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == canonical_form(g)


class TestCounts:
    def test_frozen_counts_small(self):
        for m in range(1, 9):
            assert enumerate_graphs(EnumFilter(m=m)) == FROZEN_COUNTS[m]

    def test_frozen_counts_nine_ten(self):
        assert enumerate_graphs(EnumFilter(m=9)) == FROZEN_COUNTS[9]
        assert enumerate_graphs(EnumFilter(m=10)) == FROZEN_COUNTS[10]

    def test_counts_match_atlas_series(self):
        series = count_oracle(6)
        for m in range(1, 7):
            assert enumerate_graphs(EnumFilter(m=m)) == series[m]
            assert series[m] == FROZEN_COUNTS[m]

    def test_class_sets_match_atlas(self):
        for m in range(1, 7):
            want = {canonical_form(g) for g in assemble_classes(m)}
            got = set()
            n = enumerate_graphs(EnumFilter(m=m), lambda g: got.add(canonical_form(g)))
            assert n == len(got)  # emitted classes are pairwise non-isomorphic
            assert got == want

    def test_single_edge(self):
        seen = []
        assert enumerate_graphs(EnumFilter(m=1), seen.append) == 1
        assert seen[0] == Graph.from_edges([(0, 1)])

    def test_three_edges_explicit(self):
        want = {
            canonical_form(Graph.from_edges([(0, 1), (1, 2), (2, 0)])),
            canonical_form(Graph.from_edges([(0, 1), (1, 2), (2, 3)])),
            canonical_form(Graph.from_edges([(0, 1), (0, 2), (0, 3)])),
            canonical_form(Graph.from_edges([(0, 1), (1, 2), (3, 4)])),
            canonical_form(Graph.from_edges([(0, 1), (2, 3), (4, 5)])),
        }
        got = set()
        enumerate_graphs(EnumFilter(m=3), lambda g: got.add(canonical_form(g)))
        assert got == want

    def test_no_isolated_vertices_emitted(self):
        def check(g):
            assert min(g.degree(v) for v in range(g.n)) >= 1

        enumerate_graphs(EnumFilter(m=6), check)

    def test_dup_free_certs_m_ten(self):
        certs = []
        n = enumerate_graphs(EnumFilter(m=10), lambda g: certs.append(canonical_form(g)))
        assert n == len(certs) == len(set(certs))


class TestFilters:
    def test_parse(self):
        f = EnumFilter.parse(7, "c3free, NonBipartite")
        assert f.flags == frozenset({"C3Free", "NonBipartite"})
        assert EnumFilter.parse(7, "").flags == frozenset()
        with pytest.raises(ValueError, match="unknown filter flag"):
            EnumFilter.parse(7, "C6Free")

    def test_validation(self):
        with pytest.raises(ValueError, match="positive integer"):
            EnumFilter(m=0)
        with pytest.raises(ValueError, match="unknown filter flag"):
            EnumFilter(m=3, flags=frozenset({"Planar"}))

    def test_cache_key(self):
        assert EnumFilter(m=4).cache_key() == "m4-none"
        key = EnumFilter(m=5, flags=frozenset({"NonBipartite", "C3Free"})).cache_key()
        assert key == "m5-C3Free-NonBipartite"

    def test_filtered_sets_match_posthoc(self):
        # pruned enumeration must agree with post-hoc filtering of the full
        # atlas-assembled universe, for every single flag and two combos
        combos = [frozenset({f}) for f in sorted(FILTER_FLAGS)]
        combos += [
            frozenset({"C3Free", "NonBipartite"}),
            frozenset({"C4PlusFree", "Connected"}),
        ]
        for m in (4, 5, 6):
            universe = assemble_classes(m)
            for flags in combos:
                filt = EnumFilter(m=m, flags=flags)
                want = {canonical_form(g) for g in universe if filt.passes(g)}
                got = set()
                enumerate_graphs(filt, lambda g: got.add(canonical_form(g)))
                assert got == want, (m, sorted(flags))

    def test_c4_plus_is_weaker_than_c4(self):
        # the four-cycle itself carries no apex, so only C4Free rejects it
        c4 = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
        assert EnumFilter(m=4, flags=frozenset({"C4PlusFree"})).passes(c4)
        assert not EnumFilter(m=4, flags=frozenset({"C4Free"})).passes(c4)

    def test_passes_wrong_edge_count(self):
        g = Graph.from_edges([(0, 1)])
        assert not EnumFilter(m=2).passes(g)


class TestDeterminism:
    def test_thread_count_invariant_order(self):
        runs = {}
        for threads in (1, 3):
            seq = []
            enumerate_graphs(EnumFilter(m=7), seq.append, threads=threads)
            runs[threads] = seq
        assert runs[1] == runs[3]  # labeled graphs, not just certs

    def test_repeat_runs_identical(self):
        filt = EnumFilter(m=6, flags=frozenset({"C3Free"}))
        a, b = [], []
        enumerate_graphs(filt, a.append)
        enumerate_graphs(filt, b.append)
        assert a == b

    def test_soft_cap(self):
        with pytest.raises(ResourceLimitError, match="soft cap"):
            enumerate_graphs(EnumFilter(m=15))

    def test_hard_cap(self):
        with pytest.raises(ResourceLimitError, match="hard cap"):
            enumerate_graphs(EnumFilter(m=HARD_CAP + 1), soft_cap=HARD_CAP + 1)

    def test_bad_args(self):
        with pytest.raises(TypeError, match="EnumFilter"):
            enumerate_graphs(7)
        with pytest.raises(ValueError, match="threads"):
            enumerate_graphs(EnumFilter(m=3), threads=0)


class TestExtremal:
    def test_pentagon_is_triangle_free_nonbipartite_extremum(self):
        cert = extremal_rho(EnumFilter(m=5, flags=frozenset({"C3Free", "NonBipartite"})))
        c5 = Graph.from_edges([(i, (i + 1) % 5) for i in range(5)])
        assert canonical_form(cert.graph) == canonical_form(c5)
        assert cert.count == 1
        assert cert.ties == ()
        assert abs(cert.result.rho - 2.0) < 1e-9

    def test_book_graph_extremal_at_nine(self):
        cert = extremal_rho(EnumFilter(m=9, flags=frozenset({"C4PlusFree"})))
        want = build("Sn_k", n=6, k=2)
        assert canonical_form(cert.graph) == canonical_form(want)
        assert abs(cert.result.rho - (1 + math.sqrt(33)) / 2) < 1e-9
        assert cert.ties == ()
        assert len(cert.runners_up) == 5
        assert all(r < cert.result.rho + 1e-9 for _, r in cert.runners_up)

    def test_exact_tie_reported(self):
        # triangle-free with four edges: C4 and K_{1,4} share rho = 2
        cert = extremal_rho(EnumFilter(m=4, flags=frozenset({"C3Free"})))
        c4 = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
        star = Graph.from_edges([(0, v) for v in range(1, 5)])
        got = {canonical_form(cert.graph), *cert.ties}
        assert got == {canonical_form(c4), canonical_form(star)}
        assert abs(cert.result.rho - 2.0) < 1e-9

    def test_empty_family(self):
        with pytest.raises(EmptyFamilyError):
            extremal_rho(EnumFilter(m=3, flags=frozenset({"C3Free", "NonBipartite"})))

    def test_to_json_shape(self):
        cert = extremal_rho(EnumFilter(m=4, flags=frozenset({"Connected"})))
        blob = cert.to_json()
        assert set(blob) >= {"filter", "extremal", "canonical", "rho", "bracket", "count"}
        assert blob["count"] == 5  # three 5-vertex trees, C4, and the paw
        json.dumps(blob)  # serializable


class TestFindMatching:
    def test_pentagon_star_unique_match(self):
        p = make_poly("Eq9h1", m=9, variant="recomputed")
        hits = find_matching_graphs(9, p.coeffs)
        want = build("C5StarDot", m=9)
        assert len(hits) == 1
        assert canonical_form(hits[0]) == canonical_form(want)

    def test_degree_too_high_is_empty(self):
        poly = (1,) + (0,) * 18 + (1,)  # degree 19 > 2 * 9
        assert find_matching_graphs(9, poly) == []

    def test_eigenvalue_pair_matches(self):
        # x^2 - 1 divides the characteristic polynomial of six disjoint edges
        hits = find_matching_graphs(6, (-1, 0, 1))
        assert hits
        six_k2 = Graph.from_edges([(2 * i, 2 * i + 1) for i in range(6)])
        certs = {canonical_form(g) for g in hits}
        assert canonical_form(six_k2) in certs
        for g in hits:
            assert char_poly(g).divisible_by((-1, 0, 1))

    def test_filter_mismatch(self):
        with pytest.raises(ValueError, match="m=5"):
            find_matching_graphs(4, (1, 1), EnumFilter(m=5))


class TestCache:
    def test_round_trip(self, tmp_path):
        filt = EnumFilter(m=5, flags=frozenset({"C3Free", "NonBipartite"}))
        cert = extremal_rho(filt)
        save_extremal_cache(tmp_path, cert)
        blob = load_extremal_cache(tmp_path, filt)
        assert blob is not None
        assert blob["count"] == 1
        assert graph6_decode(blob["extremal"]).m == 5

    def test_corrupt_bracket_discarded(self, tmp_path):
        filt = EnumFilter(m=4, flags=frozenset({"Connected"}))
        cert = extremal_rho(filt)
        path = save_extremal_cache(tmp_path, cert)
        blob = json.loads(open(path).read())
        blob["bracket"] = ["7", "8"]
        with open(path, "w") as fh:
            json.dump(blob, fh)
        assert load_extremal_cache(tmp_path, filt) is None

    def test_missing_is_none(self, tmp_path):
        assert load_extremal_cache(tmp_path, EnumFilter(m=4)) is None

    def test_path_uses_cache_key(self, tmp_path):
        filt = EnumFilter(m=6, flags=frozenset({"C4Free"}))
        assert "m6-C4Free" in cache_path(tmp_path, filt)
