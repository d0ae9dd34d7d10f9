"""Tests for the gadget library and its verification."""

from itertools import permutations

import pytest

from cspalgebra.domain.models import Gadget, GadgetPart
from cspalgebra.engine.exceptions import CapExceededError, GadgetError, PreconditionError
from cspalgebra.engine.gadgets import (
    certify,
    check_assembly,
    extend_boundary,
    inverter,
    or_gate,
    ring,
    variable_setter,
    verify_gadget,
)
from cspalgebra.engine.gadgets.verify import extender


def without_edge(g: Gadget, edge: int) -> Gadget:
    """The leaf gadget with one internal edge removed."""
    shift = {e: e - (e > edge) for e in g.coding_edges}
    return Gadget(
        f"{g.name}-{edge}",
        g.graph.without_edge(edge),
        tuple(shift[e] for e in g.coding_edges),
        g.predicate,
        g.stubs,
    )


def setter_pattern(*agree: bool) -> tuple[int, ...]:
    return tuple(c for same in agree for c in ((1, 1) if same else (0, 2)))


class TestInverter:
    """Tests for inverter()."""

    def test_shape(self):
        g = inverter()
        assert g.graph.vertex_count == 12
        assert g.internal_vertex_count == 7
        assert all(d == 3 for d in g.graph.degrees()[:7])
        assert g.is_leaf

    def test_passes_over_all_patterns(self):
        verdict = verify_gadget(inverter())
        assert verdict.passed
        assert verdict.checked == 243
        assert not verdict.up_to_permutation

    def test_examples(self):
        ext = extender(inverter())
        assert ext.extendable((0, 0, 1, 2, 0))
        assert not ext.extendable((0, 0, 1, 1, 2))

    def test_predicate_closed_under_colour_permutation(self):
        patterns = set(inverter().predicate.patterns())
        assert len(patterns) == 36
        for perm in permutations(range(3)):
            assert {tuple(perm[c] for c in p) for p in patterns} == patterns

    def test_missing_edge_gives_counterexample(self):
        mutated = without_edge(inverter(), 6)  # A-C
        verdict = verify_gadget(mutated)
        assert not verdict.passed
        assert verdict.counterexample is not None
        assert extender(mutated).extendable((0, 0, 1, 1, 2))


class TestRingAndOrGate:
    """Tests for ring() and or_gate()."""

    def test_ring_passes(self):
        assert verify_gadget(ring()).passed

    def test_ring_rejects_all_agreeing(self):
        assert not ring().predicate.admits((0, 0, 1, 1, 2, 2))
        assert not ring().predicate.admits((0, 0, 0, 0, 0, 0))

    def test_or_gate_passes(self):
        verdict = verify_gadget(or_gate())
        assert verdict.passed
        assert verdict.checked == 729
        check_assembly(or_gate())

    def test_or_gate_examples(self):
        ext = extender(or_gate())
        assert not ext.extendable((0, 1, 0, 2, 1, 2))
        assert ext.extendable((2, 2, 0, 1, 1, 0))
        assert ext.extendable((0, 0, 1, 1, 2, 2))

    def test_extension_is_proper(self):
        g = or_gate()
        coloring = extend_boundary(g, dict(enumerate((1, 1, 0, 2, 2, 1))))
        assert coloring.is_proper(g.graph)
        assert [coloring[e] for e in g.coding_edges] == [1, 1, 0, 2, 2, 1]
        assert extend_boundary(g, dict(enumerate((0, 1, 0, 2, 1, 2)))) is None


class TestVariableSetter:
    """Tests for variable_setter()."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_passes(self, n):
        assert verify_gadget(variable_setter(n)).passed

    def test_single_pair_admits_everything(self):
        assert sum(1 for _ in variable_setter(1).predicate.patterns()) == 9

    def test_four_pairs(self):
        ext = extender(variable_setter(4))
        assert not ext.extendable(setter_pattern(True, True, False, True))
        assert ext.extendable(setter_pattern(True, True, True, True))
        assert ext.extendable(setter_pattern(False, False, False, False))

    def test_subcubic(self):
        g = variable_setter(3)
        assert max(g.graph.degrees()) == 3
        assert len(g.coding_edges) == 6
        assert all(g.graph.degrees()[s] == 1 for s in g.stubs)

    def test_bounds(self):
        with pytest.raises(PreconditionError):
            variable_setter(0)
        with pytest.raises(CapExceededError):
            variable_setter(10_000)

    def test_certify_large_setter_through_parts(self):
        assert certify(variable_setter(6)) is variable_setter(6)

    def test_pattern_cap(self):
        with pytest.raises(CapExceededError):
            verify_gadget(variable_setter(4), pattern_cap=100)


class TestCheckAssembly:
    """Tests for check_assembly."""

    def test_rejects_overlapping_parts(self):
        g = or_gate()
        first = g.parts[0]
        doubled = Gadget(
            "broken",
            g.graph,
            g.coding_edges,
            g.predicate,
            g.stubs,
            g.parts + (GadgetPart(first.gadget, first.edge_map, "copy"),),
        )
        with pytest.raises(GadgetError):
            check_assembly(doubled)
