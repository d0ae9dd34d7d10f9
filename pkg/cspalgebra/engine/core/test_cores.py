"""Tests for cores and automorphisms."""

import pytest

from cspalgebra.engine.core import (
    automorphism_orbits,
    automorphisms,
    find_core,
    hom_equivalent,
    is_core,
    is_homomorphism,
    is_transitive,
    iter_homomorphisms,
)
from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.fixtures.catalog import (
    EDGE,
    complete_graph,
    cycle_graph,
    digraph_structure,
    directed_cycle,
    k2,
    k3,
    looped_star,
    path3,
)


class TestFindCore:
    """Tests for find_core."""

    def test_path_retracts_to_edge(self):
        """The core of a bipartite graph is K2."""
        core = find_core(path3())
        assert core.core.domain_size == 2
        assert core.core.relation(EDGE) == k2().relation(EDGE)

    def test_complete_graph_is_core(self):
        core = find_core(k3())
        assert core.core == k3()
        assert core.retraction == (0, 1, 2)

    def test_looped_star(self):
        """Everything maps onto the loop."""
        core = find_core(looped_star())
        assert core.core.domain_size == 1
        assert core.core.relation(EDGE) == frozenset({(0, 0)})
        assert core.embedding == (0,)

    @pytest.mark.parametrize(
        "fixture",
        [path3, looped_star, lambda: cycle_graph(6), lambda: complete_graph(4), directed_cycle],
    )
    def test_retraction_contract(self, fixture):
        """The retraction is a homomorphism that fixes the core pointwise."""
        s = fixture()
        result = find_core(s)
        assert is_homomorphism(result.retraction, s.as_instance(), result.core)
        for i, original in enumerate(result.embedding):
            assert result.retraction[original] == i
        assert hom_equivalent(s, result.core)

    @pytest.mark.parametrize("fixture", [path3, looped_star, lambda: cycle_graph(6)])
    def test_core_endomorphisms_are_bijective(self, fixture):
        """Every endomorphism of the core is injective and the core is its own core."""
        core = find_core(fixture()).core
        for h in iter_homomorphisms(core.as_instance(), core):
            assert len(set(h.values)) == core.domain_size
        assert find_core(core).core.domain_size == core.domain_size

    def test_node_cap(self):
        with pytest.raises(CapExceededError):
            find_core(cycle_graph(8), node_cap=1)


class TestAutomorphisms:
    """Tests for automorphisms and orbits."""

    def test_k3_is_transitive(self):
        assert len(automorphisms(k3())) == 6
        assert is_transitive(k3())

    def test_directed_path_is_rigid(self):
        s = digraph_structure(2, [(0, 1)])
        assert automorphisms(s) == [(0, 1)]
        assert automorphism_orbits(s) == [frozenset({0}), frozenset({1})]
        assert is_core(s)

    def test_path_is_not_core(self):
        assert not is_core(path3())
