"""Tests for homomorphism search, projections and disjoint unions."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import Assignment, Instance, Signature, Structure
from cspalgebra.engine.core import (
    disjoint_union,
    find_homomorphism,
    hom_equivalent,
    is_homomorphism,
    iter_homomorphisms,
    project_solutions,
    sat_find_homomorphism,
)
from cspalgebra.engine.exceptions import (
    CapExceededError,
    SignatureMismatchError,
    ValueOutOfRangeError,
)
from cspalgebra.fixtures.catalog import (
    EDGE,
    complete_graph,
    cycle_graph,
    horn,
    k2,
    k3,
    path3,
    three_sat,
)

EDGES = Signature.of((EDGE, 2))


def graph_instance(n: int, edges: list[tuple[int, int]]) -> Instance:
    rows = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    return Instance.create(n, EDGES, {EDGE: rows})


def brute_force(x: Instance, s: Structure) -> list[tuple[int, ...]]:
    return [
        f
        for f in product(range(s.domain_size), repeat=x.variable_count)
        if all(
            tuple(f[v] for v in row) in target
            for table, target in zip(x.tables, s.tables, strict=True)
            for row in table
        )
    ]


def random_instance(rng: random.Random, s: Structure, n: int, m: int) -> Instance:
    constraints: dict[str, list[tuple[int, ...]]] = {name: [] for name in s.signature.names}
    for _ in range(m):
        symbol = rng.choice(s.signature.relations)
        constraints[symbol.name].append(tuple(rng.randrange(n) for _ in range(symbol.arity)))
    return Instance.create(n, s.signature, constraints)


def random_template(rng: random.Random) -> Structure:
    d = rng.randint(2, 3)
    relations = {}
    for name, arity in (("A", 1), ("B", 2), ("C", 3)):
        rows = [t for t in product(range(d), repeat=arity) if rng.random() < 0.55]
        relations[name] = rows
    return Structure.create(d, relations, {"A": 1, "B": 2, "C": 3})


class TestIsHomomorphism:
    """Tests for is_homomorphism."""

    def test_identity_on_k3(self):
        """The identity is an endomorphism of K3."""
        assert is_homomorphism(Assignment((0, 1, 2)), k3().as_instance(), k3())

    def test_constant_map_into_k2(self):
        """K2 has no loops, so a constant map on an edge fails."""
        assert not is_homomorphism([0, 0], graph_instance(2, [(0, 1)]), k2())

    def test_four_cycle_two_colouring(self):
        """Alternating colours properly 2-colour the 4-cycle."""
        x = graph_instance(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert is_homomorphism([0, 1, 0, 1], x, k2())

    def test_signature_mismatch(self):
        """Instances over another signature are rejected."""
        with pytest.raises(SignatureMismatchError):
            is_homomorphism([0], Instance.create(1, Signature.of(("R", 1)), {}), k2())

    def test_partial_map_rejected(self):
        """A map that is not total is out of range."""
        with pytest.raises(ValueOutOfRangeError):
            is_homomorphism([0], graph_instance(2, [(0, 1)]), k2())


class TestFindHomomorphism:
    """Tests for find_homomorphism."""

    def test_odd_cycle_not_two_colourable(self):
        """C5 has no homomorphism into K2."""
        assert find_homomorphism(cycle_graph(5).as_instance(), k2()) is None

    def test_odd_cycle_three_colourable(self):
        """C5 maps into K3 and the result is verified."""
        x = cycle_graph(5).as_instance()
        f = find_homomorphism(x, k3())
        assert f is not None
        assert is_homomorphism(f, x, k3())

    def test_unconstrained_variable(self):
        """A single variable without constraints gets the least value."""
        x = Instance.create(1, EDGES, {})
        assert find_homomorphism(x, k3()) == Assignment((0,))

    def test_seed_is_extended(self):
        """Seeded values are kept in the result."""
        x = path3().as_instance()
        f = find_homomorphism(x, k2(), {1: 0})
        assert f is not None
        assert f.values == (1, 0, 1)

    def test_seed_out_of_range(self):
        """Seed values must be template elements."""
        with pytest.raises(ValueOutOfRangeError):
            find_homomorphism(path3().as_instance(), k2(), {0: 5})

    def test_contradictory_seed(self):
        """Adjacent variables seeded equal have no extension into K2."""
        assert find_homomorphism(path3().as_instance(), k2(), {0: 0, 1: 0}) is None

    def test_index_order_agrees(self):
        """Both variable orders find homomorphisms on the same instances."""
        x = cycle_graph(6).as_instance()
        assert find_homomorphism(x, k2(), order="index") is not None
        assert find_homomorphism(x, k2(), order="mrv") is not None

    def test_node_cap(self):
        """The node cap refuses searches that run too long."""
        x = complete_graph(5).as_instance()
        with pytest.raises(CapExceededError):
            find_homomorphism(x, complete_graph(4), node_cap=3)

    def test_repeated_variable_in_tuple(self):
        """A tuple repeating a variable only uses template rows with equal entries."""
        s = Structure.create(2, {"R": [(0, 1, 0), (1, 1, 0)]})
        x = Instance.create(2, s.signature, {"R": [(0, 1, 0)]})
        assert find_homomorphism(x, s) == Assignment((0, 1))

    def test_empty_relation_is_unsatisfiable(self):
        """A constraint on an empty table cannot be met."""
        s = Structure.create(2, {"R": []}, {"R": 1})
        x = Instance.create(1, s.signature, {"R": [(0,)]})
        assert find_homomorphism(x, s) is None

    @pytest.mark.slow
    def test_agrees_with_enumeration(self):
        """Search and exhaustive enumeration agree on random small instances."""
        rng = random.Random(7)
        for _ in range(500):
            s = random_template(rng)
            x = random_instance(rng, s, rng.randint(1, 9), rng.randint(0, 12))
            expected = brute_force(x, s)
            found = find_homomorphism(x, s)
            if expected:
                assert found is not None
                assert found.values in expected
            else:
                assert found is None


class TestSatBackend:
    """Tests for the CNF back-end."""

    def test_agrees_with_native_search(self):
        """SAT and native search agree on solvability."""
        rng = random.Random(11)
        for _ in range(60):
            s = random_template(rng)
            x = random_instance(rng, s, rng.randint(1, 7), rng.randint(0, 9))
            native = find_homomorphism(x, s)
            values = sat_find_homomorphism(x, s)
            assert (values is None) == (native is None)
            if values is not None:
                assert is_homomorphism(values, x, s)

    def test_three_sat_clause(self):
        """Wide constraints go through row selectors."""
        s = three_sat()
        x = Instance.create(3, s.signature, {"D0": [(0, 1, 2)], "D3": [(0, 1, 2)]})
        values = sat_find_homomorphism(x, s)
        assert values is not None
        assert is_homomorphism(values, x, s)

    def test_seed_respected(self):
        """Seeded variables keep their values."""
        values = sat_find_homomorphism(path3().as_instance(), k2(), seed={0: 1})
        assert values == (1, 0, 1)


class TestIterHomomorphisms:
    """Tests for iter_homomorphisms."""

    def test_counts_k3_automorphisms(self):
        """K3 has six endomorphisms, all bijective."""
        assert len(list(iter_homomorphisms(k3().as_instance(), k3()))) == 6

    def test_matches_enumeration(self):
        """Every solution is produced exactly once."""
        x = cycle_graph(4).as_instance()
        found = sorted(h.values for h in iter_homomorphisms(x, k3()))
        assert found == sorted(brute_force(x, k3()))


class TestProjectSolutions:
    """Tests for project_solutions."""

    def test_single_edge(self):
        """An edge projects to both orientations of the K2 edge."""
        x = graph_instance(2, [(0, 1)])
        assert project_solutions(x, k2(), (0, 1)) == {(0, 1), (1, 0)}

    def test_unsolvable(self):
        """No solutions project to the empty set."""
        assert project_solutions(cycle_graph(3).as_instance(), k2(), (0,)) == set()

    def test_forced_horn_instance(self):
        """A uniquely solvable Horn instance projects to one tuple."""
        s = horn()
        x = Instance.create(3, s.signature, {"U1": [(0,)], "U0": [(2,)], "H": [(0, 0, 1)]})
        assert project_solutions(x, s, (0, 1, 2)) == {(1, 1, 0)}

    def test_all_variables_equal_enumeration(self):
        """Projecting onto every variable gives the full solution set."""
        rng = random.Random(3)
        for _ in range(40):
            s = random_template(rng)
            x = random_instance(rng, s, rng.randint(1, 5), rng.randint(0, 6))
            variables = tuple(range(x.variable_count))
            assert project_solutions(x, s, variables) == set(brute_force(x, s))

    def test_requires_variables(self):
        """The projection needs at least one variable."""
        with pytest.raises(ValueOutOfRangeError):
            project_solutions(path3().as_instance(), k2(), ())


class TestHomEquivalent:
    """Tests for hom_equivalent."""

    def test_path_and_edge(self):
        """Bipartite graphs are equivalent to K2."""
        assert hom_equivalent(k2(), path3())

    def test_k2_and_k3(self):
        """K3 does not map into K2."""
        assert not hom_equivalent(k2(), k3())

    def test_reflexive(self):
        assert hom_equivalent(k3(), k3())


class TestDisjointUnion:
    """Tests for disjoint_union."""

    def test_offsets(self):
        """Variables of the second instance are shifted past the first."""
        x = graph_instance(2, [(0, 1)])
        y = graph_instance(3, [(0, 2)])
        union, left, right = disjoint_union(x, y)
        assert union.variable_count == 5
        assert left == (0, 1)
        assert right == (2, 3, 4)
        assert (2, 4) in union.relation(EDGE)

    def test_empty_side(self):
        """Adding an instance without variables changes nothing."""
        x = graph_instance(2, [(0, 1)])
        union, _, right = disjoint_union(x, Instance.create(0, EDGES, {}))
        assert union == x
        assert right == ()

    def test_two_edges_share_nothing(self):
        """Two single edges stay disconnected."""
        union, _, _ = disjoint_union(graph_instance(2, [(0, 1)]), graph_instance(2, [(0, 1)]))
        assert union.relation(EDGE) == frozenset({(0, 1), (1, 0), (2, 3), (3, 2)})
