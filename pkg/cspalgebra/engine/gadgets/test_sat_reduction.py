"""Tests for the 3SAT reduction and its translations."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import Assignment, CNFInstance, EdgeColoring
from cspalgebra.engine.exceptions import PreconditionError
from cspalgebra.engine.gadgets import (
    assignment_to_coloring,
    coloring_to_assignment,
    find_edge_coloring,
    reduce_3sat,
)


@pytest.fixture
def two_clauses():
    return CNFInstance.from_signed(3, [(-1, 2, -3), (1, -2, 3)])


def satisfying(phi: CNFInstance) -> list[tuple[bool, ...]]:
    return [
        values
        for values in product((False, True), repeat=phi.variable_count)
        if phi.satisfied_by(values)
    ]


def random_formula(rng: random.Random) -> CNFInstance:
    n = rng.randint(3, 6)
    clauses = [
        [(v + 1) * rng.choice((1, -1)) for v in rng.sample(range(n), 3)]
        for _ in range(rng.randint(1, 4))
    ]
    return CNFInstance.from_signed(n, clauses)


def check_agreement(phi: CNFInstance) -> None:
    record = reduce_3sat(phi)
    coloring = find_edge_coloring(record.graph)
    assert (coloring is not None) == bool(satisfying(phi))
    if coloring is not None:
        assert phi.satisfied_by([bool(v) for v in coloring_to_assignment(coloring, record)])


class TestReduce3Sat:
    """Tests for reduce_3sat."""

    def test_two_clause_shape(self, two_clauses):
        record = reduce_3sat(two_clauses)
        assert len(record.setters) == 3
        assert all(len(record.parts[i].coding_map()) == 4 for i in record.setters.values())
        assert len(record.gates) == 2
        assert sorted(record.inverters) == [(0, 0), (0, 2), (1, 1)]

    def test_single_positive_clause(self):
        record = reduce_3sat(CNFInstance.from_signed(3, [(1, 2, 3)]))
        assert len(record.setters) == 3
        assert len(record.gates) == 1
        assert not record.inverters

    def test_components_share_no_vertices(self, two_clauses):
        record = reduce_3sat(two_clauses)
        sizes = sum(part.gadget.internal_vertex_count for part in record.parts)
        assert record.graph.vertex_count == sizes + record.pendant_count

    def test_degree_at_most_three(self, two_clauses):
        assert max(reduce_3sat(two_clauses).graph.degrees()) <= 3

    def test_unused_variable(self):
        record = reduce_3sat(CNFInstance.from_signed(4, [(1, -2, 3)]))
        assert 3 not in record.setters
        assert record.variable_pair(3) is None


class TestTranslations:
    """Tests for coloring_to_assignment and assignment_to_coloring."""

    def test_round_trip(self, two_clauses):
        record = reduce_3sat(two_clauses)
        for values in satisfying(two_clauses):
            a = Assignment(tuple(int(v) for v in values))
            coloring = assignment_to_coloring(a, record)
            assert coloring.is_proper(record.graph)
            assert coloring_to_assignment(coloring, record) == a

    def test_rejects_non_satisfying_assignment(self, two_clauses):
        record = reduce_3sat(two_clauses)
        with pytest.raises(PreconditionError):
            assignment_to_coloring(Assignment((1, 0, 1)), record)

    def test_rejects_improper_colouring(self, two_clauses):
        record = reduce_3sat(two_clauses)
        improper = EdgeColoring((0,) * record.graph.edge_count)
        with pytest.raises(PreconditionError):
            coloring_to_assignment(improper, record)

    def test_unused_variable_reads_false(self):
        phi = CNFInstance.from_signed(4, [(1, -2, 3)])
        record = reduce_3sat(phi)
        coloring = assignment_to_coloring((1, 1, 0, 0), record)
        assert coloring_to_assignment(coloring, record) == Assignment((1, 1, 0, 0))


class TestReductionAgreement:
    """Satisfiability agrees with colourability of the reduction graph."""

    def test_all_sign_patterns_unsatisfiable(self):
        phi = CNFInstance.from_signed(
            3, [tuple(s * v for s, v in zip(signs, (1, 2, 3), strict=True)) for signs in product((1, -1), repeat=3)]
        )
        assert not satisfying(phi)
        assert find_edge_coloring(reduce_3sat(phi).graph) is None

    def test_satisfiable_is_colourable(self, two_clauses):
        record = reduce_3sat(two_clauses)
        assert find_edge_coloring(record.graph) is not None

    def test_small_random_corpus(self):
        rng = random.Random(11)
        for _ in range(15):
            check_agreement(random_formula(rng))

    @pytest.mark.slow
    def test_random_corpus(self):
        rng = random.Random(2024)
        for _ in range(200):
            check_agreement(random_formula(rng))
