"""Certified spectral radius, characteristic polynomials, quotients, rotation."""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from specturan import intpoly as ip
from specturan.graphs import Graph, GraphError
from specturan.spectral import (
    CharPoly,
    RotationError,
    char_poly,
    compare_rho,
    compare_rho_to,
    equitable_partition,
    rho_squared_upper_bound,
    rotate_edges,
    spectral_radius,
)


def cycle(n):
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def star(leaves):
    return Graph.from_edges([(0, v) for v in range(1, leaves + 1)], n=leaves + 1)


def s_n_1(n):
    # star on n vertices plus one edge between two leaves
    return Graph.from_edges([(0, v) for v in range(1, n)] + [(1, 2)], n=n)


def join_k2(outer):
    # K2 joined to `outer` isolated vertices
    edges = [(0, 1)]
    for v in range(2, outer + 2):
        edges += [(0, v), (1, v)]
    return Graph.from_edges(edges, n=outer + 2)


def random_graph(rng, n, p=0.35):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, n=n)


def random_connected(rng, n, p=0.4):
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def dense(g):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


class TestCharPoly:
    def test_small_examples(self):
        assert char_poly(Graph.from_edges([(0, 1)])).coeffs == (-1, 0, 1)
        assert char_poly(cycle(4)).coeffs == (0, 0, -4, 0, 1)

    def test_against_sympy(self):
        rng = random.Random(301)
        x = sympy.Symbol("x")
        for _ in range(25):
            n = rng.randrange(1, 9)
            g = random_graph(rng, n)
            ours = char_poly(g).coeffs
            mat = sympy.Matrix(dense(g).astype(int).tolist())
            theirs = mat.charpoly(x).all_coeffs()
            assert list(reversed(ours)) == [int(c) for c in theirs]

    def test_value_matches_determinant(self):
        rng = random.Random(307)
        for _ in range(30):
            n = rng.randrange(1, 8)
            g = random_graph(rng, n)
            p = char_poly(g)
            a = dense(g).astype(int).tolist()
            for k in (-2, -1, 0, 1, 2, 3):
                shifted = [[k * (i == j) - a[i][j] for j in range(n)] for i in range(n)]
                assert p.evaluate(k) == ip.bareiss_det(shifted)

    def test_divisible_by(self):
        g = s_n_1(9)
        assert char_poly(g).divisible_by((6, -8, -1, 1))  # x^3 - x^2 - 8x + 6


class TestEquitablePartition:
    def test_join_example(self):
        q = equitable_partition(join_k2(4))
        assert q.cells == ((0, 1), (2, 3, 4, 5))
        assert q.b == ((1, 4), (2, 0))
        assert q.charpoly() == (-8, -1, 1)  # x^2 - x - 8

    def test_cycle_single_cell(self):
        q = equitable_partition(cycle(5))
        assert q.cells == ((0, 1, 2, 3, 4),)
        assert q.b == ((2,),)

    def test_seeded_refinement(self):
        q = equitable_partition(cycle(5), seed=[[0], [1, 2, 3, 4]])
        assert q.cells == ((0,), (1, 4), (2, 3))
        assert q.b == ((0, 2, 0), (1, 0, 1), (0, 1, 1))

    def test_seed_must_partition(self):
        with pytest.raises(GraphError):
            equitable_partition(cycle(4), seed=[[0, 1], [1, 2, 3]])

    def test_entrywise_equitability(self):
        rng = random.Random(311)
        for _ in range(60):
            g = random_graph(rng, rng.randrange(1, 11))
            q = equitable_partition(g)
            index = {}
            for ci, cell in enumerate(q.cells):
                for v in cell:
                    index[v] = ci
            for ci, cell in enumerate(q.cells):
                for v in cell:
                    counts = [0] * len(q.cells)
                    for u in g.neighbors(v):
                        counts[index[u]] += 1
                    assert tuple(counts) == tuple(q.b[ci])

    def test_quotient_divides_charpoly(self):
        rng = random.Random(313)
        for _ in range(40):
            g = random_graph(rng, rng.randrange(1, 10))
            full = char_poly(g)
            assert full.divisible_by(equitable_partition(g).charpoly())


class TestSpectralRadius:
    def test_cycle_exact_two(self):
        res = spectral_radius(cycle(5))
        assert compare_rho_to(cycle(5), 2, result=res) == 0
        assert res.bracket[0] < 2 <= res.bracket[1]
        assert abs(res.rho - 2.0) < 1e-9

    def test_star_sqrt(self):
        g = star(5)
        assert compare_rho_to(g, ip.Surd.sqrt(5)) == 0

    def test_s91_exact_three(self):
        res = spectral_radius(s_n_1(9))
        assert compare_rho_to(s_n_1(9), 3, result=res) == 0
        assert res.bracket_width <= Fraction(1, 10**10)
        assert res.bracket[0] < 3 <= res.bracket[1]

    def test_bracket_respects_tol(self):
        g = random_connected(random.Random(317), 8)
        for tol in (1e-6, 1e-10, 1e-12):
            res = spectral_radius(g, tol=tol)
            assert res.bracket_width <= Fraction(tol)
            assert res.bracket[0] < Fraction(res.rho) <= res.bracket[1] or abs(
                float(res.bracket[0]) - res.rho
            ) < tol

    def test_matches_numpy_on_random_graphs(self):
        rng = random.Random(331)
        for _ in range(60):
            g = random_graph(rng, rng.randrange(1, 12))
            res = spectral_radius(g)
            want = max(
                (float(np.max(np.linalg.eigvalsh(dense(g.subgraph(c))))) for c in g.components()),
                default=0.0,
            )
            assert abs(res.rho - want) < 1e-8

    def test_single_vertex(self):
        res = spectral_radius(Graph.empty(1))
        assert res.rho == 0.0 and res.perron == (1.0,) and res.ustar == 0

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            spectral_radius(Graph.empty(0))

    def test_perron_invariants(self):
        rng = random.Random(337)
        for _ in range(100):
            g = random_graph(rng, rng.randrange(1, 13))
            res = spectral_radius(g)
            x = np.array(res.perron)
            assert np.all(x >= 0)
            assert abs(float(np.linalg.norm(x)) - 1.0) < 1e-9
            residual = float(np.max(np.abs(dense(g) @ x - res.rho * x)))
            assert residual < 1e-8
            support = {v for v in range(g.n) if x[v] > 1e-12}
            assert support <= set(res.component)

    def test_tie_goes_to_lowest_component(self):
        # two K2 components tie at rho = 1
        g = Graph.from_edges([(0, 1), (2, 3)], n=4)
        res = spectral_radius(g)
        assert res.component == (0, 1)
        assert res.ustar == 0

    def test_cross_family_exact_tie(self):
        g = star(4)  # rho = 2
        h = cycle(4).union(Graph.empty(1))  # rho = 2
        assert compare_rho(g, h) == 0

    def test_ustar_is_hub(self):
        res = spectral_radius(join_k2(4))
        assert res.ustar == 0
        assert res.perron[0] == pytest.approx(res.perron[1])
        assert res.perron[0] > res.perron[2]

    def test_monotone_under_edge_addition(self):
        rng = random.Random(347)
        for _ in range(60):
            n = rng.randrange(2, 10)
            g = random_graph(rng, n)
            non_edges = [
                (i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)
            ]
            if not non_edges:
                continue
            h = g.add_edge(*rng.choice(non_edges))
            assert compare_rho(h, g) >= 0

    def test_rho_squared_upper_bound(self):
        rng = random.Random(349)
        for _ in range(40):
            g = random_graph(rng, rng.randrange(1, 12))
            res = spectral_radius(g)
            assert res.rho**2 <= rho_squared_upper_bound(g) + 1e-6


class TestRotation:
    def test_path_to_star(self):
        p4 = Graph.from_edges([(0, 1), (1, 2), (2, 3)], n=4)
        rotated = rotate_edges(p4, 2, 1, [3])
        assert rotated.degree(1) == 3
        assert compare_rho(rotated, p4) == 1
        golden = (1 + ip.Surd.sqrt(5)) / 2
        assert compare_rho_to(p4, golden) == 0
        assert compare_rho_to(rotated, ip.Surd.sqrt(3)) == 0

    def test_empty_move_is_identity(self):
        g = cycle(5)
        assert rotate_edges(g, 0, 2, []) == g

    def test_errors_name_offender(self):
        g = Graph.from_edges([(0, 1), (1, 2), (2, 3)], n=4)
        with pytest.raises(RotationError, match="3"):
            rotate_edges(g, 0, 1, [3])  # 3 not a neighbor of 0
        with pytest.raises(RotationError, match="2"):
            rotate_edges(g, 1, 3, [2])  # 2 already a neighbor of 3
        with pytest.raises(RotationError, match="target"):
            rotate_edges(g, 1, 0, [0])
        with pytest.raises(RotationError, match="coincide"):
            rotate_edges(g, 1, 1, [])
        with pytest.raises(RotationError, match="twice"):
            rotate_edges(g, 1, 3, [0, 0])

    def test_rotation_toward_heavier_vertex_never_decreases(self):
        rng = random.Random(353)
        done = 0
        while done < 50:
            g = random_connected(rng, rng.randrange(4, 9))
            res = spectral_radius(g)
            x = res.perron
            pairs = [
                (v, u)
                for v in range(g.n)
                for u in range(g.n)
                if u != v and x[u] >= x[v]
            ]
            rng.shuffle(pairs)
            for v, u in pairs:
                candidates = [
                    w for w in g.neighbors(v) if w != u and not g.has_edge(u, w)
                ]
                if not candidates:
                    continue
                moved = rng.sample(candidates, rng.randrange(1, len(candidates) + 1))
                rotated = rotate_edges(g, v, u, moved)
                assert compare_rho(rotated, g) >= 0
                done += 1
                break
