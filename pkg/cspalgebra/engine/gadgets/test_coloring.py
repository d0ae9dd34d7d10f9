"""Tests for 3-edge-colouring search."""

import random

import pytest

from cspalgebra.domain.models import Graph
from cspalgebra.engine.exceptions import CapExceededError, ValueOutOfRangeError
from cspalgebra.engine.gadgets import (
    brute_force_edge_coloring,
    find_edge_coloring,
    sat_edge_coloring,
)
from cspalgebra.fixtures.catalog import k4_graph, petersen, triangle_with_pendants


def random_subcubic(rng: random.Random, n: int) -> Graph:
    edges: list[tuple[int, int]] = []
    degree = [0] * n
    for _ in range(3 * n):
        u, v = rng.sample(range(n), 2)
        if degree[u] < 3 and degree[v] < 3 and (u, v) not in edges and (v, u) not in edges:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph(n, tuple(edges))


class TestBruteForceEdgeColoring:
    """Tests for brute_force_edge_coloring."""

    def test_triangle_uses_three_colours(self):
        g = Graph(3, ((0, 1), (1, 2), (0, 2)))
        coloring = brute_force_edge_coloring(g)
        assert coloring.is_proper(g)
        assert sorted(coloring.colors) == [0, 1, 2]

    def test_k4(self):
        coloring = brute_force_edge_coloring(k4_graph())
        assert coloring is not None
        assert coloring.is_proper(k4_graph())

    def test_triangle_with_pendants(self):
        g = triangle_with_pendants()
        native = brute_force_edge_coloring(g)
        assert (native is None) == (sat_edge_coloring(g) is None)
        assert native is not None and native.is_proper(g)

    def test_petersen_has_no_colouring(self):
        assert brute_force_edge_coloring(petersen()) is None
        assert sat_edge_coloring(petersen()) is None

    def test_degree_four(self):
        star = Graph(5, ((0, 1), (0, 2), (0, 3), (0, 4)))
        assert brute_force_edge_coloring(star) is None

    def test_fixed_colours(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert brute_force_edge_coloring(g, {0: 2, 1: 2}) is None
        assert brute_force_edge_coloring(g, {0: 2}).colors[0] == 2

    def test_fixed_out_of_range(self):
        with pytest.raises(ValueOutOfRangeError):
            brute_force_edge_coloring(k4_graph(), {0: 3})

    def test_cap(self):
        with pytest.raises(CapExceededError):
            brute_force_edge_coloring(petersen(), max_edges=10)


class TestBackendsAgree:
    """Native and SAT colouring agree on random subcubic graphs."""

    def test_random_graphs(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_subcubic(rng, rng.randint(2, 10))
            native = brute_force_edge_coloring(g)
            sat = sat_edge_coloring(g)
            assert (native is None) == (sat is None)
            for coloring in (native, sat):
                if coloring is not None:
                    assert coloring.is_proper(g)

    def test_dispatch_above_native_cap(self, monkeypatch):
        from cspalgebra.engine.gadgets import coloring as module

        monkeypatch.setattr(module.settings, "edge_coloring_max_edges", 5)
        coloring = find_edge_coloring(k4_graph())
        assert coloring is not None and coloring.is_proper(k4_graph())
        assert find_edge_coloring(petersen()) is None
