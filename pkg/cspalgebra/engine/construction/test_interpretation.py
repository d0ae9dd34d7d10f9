"""Tests for interpretations and the interpretation compiler."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import (
    Assignment,
    Atom,
    Instance,
    Signature,
    SimpleFormula,
    SimpleInterpretation,
    Structure,
)
from cspalgebra.engine.construction import (
    definition_interpretation,
    formula_relation,
    reduce_interpretation,
    validate_interpretation,
)
from cspalgebra.engine.core import find_homomorphism, is_homomorphism
from cspalgebra.engine.exceptions import (
    MalformedInterpretationError,
    PreconditionError,
    SignatureMismatchError,
)
from cspalgebra.fixtures.catalog import EDGE, k2, k3, nae

GRAPH = Signature.of((EDGE, 2))


def not_equal_in_nae() -> SimpleInterpretation:
    return definition_interpretation(
        nae(), GRAPH, {EDGE: SimpleFormula(("x", "y"), (), (Atom("NAE", ("x", "x", "y")),))}
    )


def k2_in_square() -> SimpleInterpretation:
    """K2 on the two edges (0, 1), (1, 0) of K2, with bound variables on both sides."""
    return SimpleInterpretation(
        dimension=2,
        domain_formula=SimpleFormula(
            ("a", "b"), ("w",), (Atom(EDGE, ("a", "b")), Atom(EDGE, ("b", "w")))
        ),
        quotient_map={(0, 1): 0, (1, 0): 1},
        target_signature=GRAPH,
        preimage_formulas={
            EDGE: SimpleFormula(
                ("a1", "a2", "b1", "b2"),
                ("z",),
                (
                    Atom(EDGE, ("a1", "a2")),
                    Atom(EDGE, ("b1", "b2")),
                    Atom(EDGE, ("a1", "b1")),
                    Atom(EDGE, ("a1", "z")),
                    Atom(EDGE, ("z", "b2")),
                ),
            )
        },
    )


def random_template(rng: random.Random) -> Structure:
    d = rng.randint(2, 3)
    relations = {
        name: [t for t in product(range(d), repeat=arity) if rng.random() < 0.6]
        for name, arity in (("A", 2), ("B", 3))
    }
    return Structure.create(d, relations, {"A": 2, "B": 3})


def random_atoms(rng: random.Random, s: Structure, names: list[str], count: int) -> tuple[Atom, ...]:
    atoms = []
    for _ in range(count):
        symbol = rng.choice(s.signature.relations)
        atoms.append(Atom(symbol.name, tuple(rng.choice(names) for _ in range(symbol.arity))))
    return tuple(atoms)


def declared(free: tuple[str, ...], atoms: tuple[Atom, ...], candidates: list[str]) -> SimpleFormula:
    used = {v for atom in atoms for v in atom.variables}
    return SimpleFormula(free, tuple(v for v in candidates if v in used), atoms)


def random_interpretation(rng: random.Random, s: Structure) -> SimpleInterpretation | None:
    """A graph interpreted in s, in dimension one or two, with the identity quotient.

    Every block of the edge formula carries a copy of the domain formula, so
    preimages stay inside the domain. None when the domain comes out empty.
    """
    n = rng.randint(1, 2)
    free = tuple(f"a{i}" for i in range(n))
    domain_atoms = random_atoms(rng, s, [*free, "w"], rng.randint(0, 2))
    domain_formula = declared(free, domain_atoms, ["w"])
    domain = sorted(formula_relation(s, domain_formula))
    if not domain:
        return None

    def block(j: int) -> tuple[Atom, ...]:
        rename = {**{f"a{i}": f"x{j}_{i}" for i in range(n)}, "w": f"w{j}"}
        return tuple(Atom(a.relation, tuple(rename[v] for v in a.variables)) for a in domain_atoms)

    edge_free = tuple(f"x{j}_{i}" for j in range(2) for i in range(n))
    extra = random_atoms(rng, s, [*edge_free, "z"], rng.randint(1, 3))
    edge_formula = declared(edge_free, block(0) + block(1) + extra, ["w0", "w1", "z"])
    return SimpleInterpretation(
        dimension=n,
        domain_formula=domain_formula,
        quotient_map={t: i for i, t in enumerate(domain)},
        target_signature=GRAPH,
        preimage_formulas={EDGE: edge_formula},
    )


def cycle(n: int) -> Instance:
    return Instance.create(n, GRAPH, {EDGE: [(i, (i + 1) % n) for i in range(n)]})


def solvable_by_enumeration(x: Instance, s: Structure) -> bool:
    return any(
        is_homomorphism(values, x, s) for values in product(s.elements, repeat=x.variable_count)
    )


class TestValidateInterpretation:
    """Tests for validate_interpretation."""

    def test_not_equal_gives_k2(self):
        assert validate_interpretation(nae(), not_equal_in_nae()) == k2()

    def test_two_dimensional(self):
        assert validate_interpretation(k2(), k2_in_square()) == k2()

    def test_identity(self):
        formulas = {EDGE: SimpleFormula(("x", "y"), (), (Atom(EDGE, ("x", "y")),))}
        assert validate_interpretation(k3(), definition_interpretation(k3(), GRAPH, formulas)) == k3()

    def test_quotient_not_total(self):
        interp = SimpleInterpretation(1, SimpleFormula(("x",)), {(0,): 0}, GRAPH, not_equal_in_nae().preimage_formulas)
        with pytest.raises(MalformedInterpretationError, match="quotient map"):
            validate_interpretation(nae(), interp)

    def test_quotient_not_onto(self):
        interp = SimpleInterpretation(
            1, SimpleFormula(("x",)), {(0,): 0, (1,): 2}, GRAPH, not_equal_in_nae().preimage_formulas
        )
        with pytest.raises(MalformedInterpretationError, match="onto"):
            validate_interpretation(nae(), interp)

    def test_not_closed_under_quotient(self):
        interp = SimpleInterpretation(
            1,
            SimpleFormula(("x",)),
            {(0,): 0, (1,): 0},
            GRAPH,
            {EDGE: SimpleFormula(("x", "y"), (), (Atom(EDGE, ("x", "y")),))},
        )
        with pytest.raises(MalformedInterpretationError, match="not closed"):
            validate_interpretation(k2(), interp)

    def test_preimage_leaves_domain(self):
        s = Structure.create(2, {EDGE: k2().relation(EDGE), "U0": [(0,)]})
        interp = SimpleInterpretation(
            1,
            SimpleFormula(("x",), (), (Atom("U0", ("x",)),)),
            {(0,): 0},
            Signature.of(("T", 1)),
            {"T": SimpleFormula(("x",))},
        )
        with pytest.raises(MalformedInterpretationError, match="leaves"):
            validate_interpretation(s, interp)

    def test_missing_formula(self):
        interp = definition_interpretation(nae(), GRAPH, {})
        with pytest.raises(MalformedInterpretationError, match="no preimage formula"):
            validate_interpretation(nae(), interp)

    def test_equality_atoms_rejected(self):
        phi = SimpleFormula(("x", "y"), (), (), (("x", "y"),), pp=True)
        interp = definition_interpretation(k2(), GRAPH, {EDGE: phi})
        with pytest.raises(MalformedInterpretationError, match="not a simple formula"):
            validate_interpretation(k2(), interp)

    def test_wrong_free_variable_count(self):
        phi = SimpleFormula(("x",), ("y",), (Atom(EDGE, ("x", "y")),))
        interp = definition_interpretation(k2(), GRAPH, {EDGE: phi})
        with pytest.raises(MalformedInterpretationError, match="free variables"):
            validate_interpretation(k2(), interp)


class TestReduceInterpretation:
    """Tests for reduce_interpretation and its translations."""

    def test_identity_keeps_instance(self):
        formulas = {EDGE: SimpleFormula(("x", "y"), (), (Atom(EDGE, ("x", "y")),))}
        x = cycle(5)
        reduction = reduce_interpretation(x, k3(), definition_interpretation(k3(), GRAPH, formulas))
        assert reduction.output == x

    def test_five_cycle_over_nae(self):
        x = cycle(5)
        reduction = reduce_interpretation(x, nae(), not_equal_in_nae())
        assert reduction.output.signature == nae().signature
        assert not solvable_by_enumeration(x, k2())
        assert not solvable_by_enumeration(reduction.output, nae())

    def test_four_cycle_round_trip(self):
        x = cycle(4)
        reduction = reduce_interpretation(x, nae(), not_equal_in_nae())
        g = find_homomorphism(x, k2())
        h = reduction.pushforward(g)
        assert is_homomorphism(h, reduction.output, nae())
        assert is_homomorphism(reduction.pullback(h), x, k2())

    def test_provenance(self):
        x = cycle(3)
        reduction = reduce_interpretation(x, k2(), k2_in_square())
        kinds = [origin.kind for origin in reduction.certificate.provenance]
        assert kinds[:6] == ["y"] * 6
        assert kinds.count("zA") == 3
        assert kinds.count("zR") == 3
        assert reduction.certificate.output_variable_count == 12
        assert reduction.certificate.degree_multiplier == 8

    def test_empty_instance(self):
        x = Instance.create(0, GRAPH, {})
        reduction = reduce_interpretation(x, nae(), not_equal_in_nae())
        assert reduction.pushforward(Assignment(())) == Assignment(())
        assert reduction.pullback(Assignment(())) == Assignment(())

    def test_rejects_non_solution(self):
        x = cycle(4)
        reduction = reduce_interpretation(x, nae(), not_equal_in_nae())
        with pytest.raises(PreconditionError):
            reduction.pushforward(Assignment((0, 0, 0, 0)))

    def test_signature_mismatch(self):
        x = Instance.create(1, nae().signature, {"NAE": [(0, 0, 0)]})
        with pytest.raises(SignatureMismatchError):
            reduce_interpretation(x, nae(), not_equal_in_nae())

    def test_random_instances_agree(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(1, 6)
            edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 7))]
            x = Instance.create(n, GRAPH, {EDGE: edges})
            reduction = reduce_interpretation(x, k2(), k2_in_square())
            assert reduction.certificate.degree_bound_holds
            h = find_homomorphism(reduction.output, k2())
            assert (h is not None) == solvable_by_enumeration(x, k2())
            if h is not None:
                assert is_homomorphism(reduction.pullback(h), x, k2())
                g = find_homomorphism(x, k2())
                assert is_homomorphism(reduction.pullback(reduction.pushforward(g)), x, k2())

    def test_random_triples_agree(self):
        """Template, interpretation and instance all drawn at random."""
        rng = random.Random(29)
        checked = 0
        while checked < 50:
            s = random_template(rng)
            interp = random_interpretation(rng, s)
            if interp is None:
                continue
            target = validate_interpretation(s, interp)
            m = rng.randint(1, 4)
            edges = [(rng.randrange(m), rng.randrange(m)) for _ in range(rng.randint(0, 5))]
            x = Instance.create(m, GRAPH, {EDGE: edges})
            reduction = reduce_interpretation(x, s, interp)
            assert reduction.certificate.degree_bound_holds
            solvable = solvable_by_enumeration(x, target)
            h = find_homomorphism(reduction.output, s)
            assert (h is not None) == solvable
            if h is not None:
                assert is_homomorphism(reduction.pullback(h), x, target)
                g = find_homomorphism(x, target)
                assert is_homomorphism(reduction.pushforward(g), reduction.output, s)
            checked += 1
