"""Tests for implies_equation and pp-closure."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import Structure
from cspalgebra.engine.exceptions import CapExceededError, PreconditionError
from cspalgebra.engine.polymorphism import implies_equation, is_pp_definable, pp_closure
from cspalgebra.fixtures.catalog import k3, nae, two_sat

AFFINE = frozenset({(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)})


class TestImpliesEquation:
    """Tests for implies_equation."""

    def test_diagonal(self):
        assert implies_equation({(0, 0), (1, 1)}, 2) == (1, 2)

    def test_edges(self):
        assert implies_equation(k3().relation("E"), 2) is None

    def test_single_tuple(self):
        assert implies_equation({(0, 0, 1)}, 3) == (1, 2)

    def test_later_pair(self):
        assert implies_equation({(0, 1, 1), (1, 0, 0)}, 3) == (2, 3)

    def test_empty_relation(self):
        with pytest.raises(PreconditionError):
            implies_equation(set(), 2)


class TestPpClosure:
    """Tests for pp_closure and is_pp_definable."""

    @pytest.mark.parametrize("fixture", [two_sat, k3, nae])
    def test_equality_is_fixed(self, fixture):
        s = fixture()
        equality = {(a, a) for a in s.elements}
        assert pp_closure(s, equality, 2) == frozenset(equality)
        assert is_pp_definable(s, equality, 2)

    def test_affine_grows_in_two_sat(self):
        """Majority sends (0,0,0),(0,1,1),(1,0,1) to (0,0,1)."""
        closure = pp_closure(two_sat(), AFFINE, 3)
        assert AFFINE < closure
        assert (0, 0, 1) in closure
        assert not is_pp_definable(two_sat(), AFFINE, 3)

    def test_full_relation(self):
        full = set(product((0, 1), repeat=2))
        assert pp_closure(two_sat(), full, 2) == frozenset(full)

    def test_template_relations_are_definable(self):
        s = two_sat()
        for symbol, table in s.items():
            assert is_pp_definable(s, table, symbol.arity)

    def test_not_equal_in_nae(self):
        """x != y is NAE(x,x,y)."""
        assert is_pp_definable(nae(), {(0, 1), (1, 0)}, 2)

    def test_empty(self):
        assert pp_closure(two_sat(), set(), 2) == frozenset()

    def test_cap(self):
        rows = set(product(range(3), repeat=2))
        with pytest.raises(CapExceededError):
            pp_closure(k3(), rows, 2)

    def test_extensive_and_idempotent(self):
        """Closure contains the relation and closing twice changes nothing."""
        rng = random.Random(23)
        reclosed = 0
        for _ in range(50):
            d = rng.randint(2, 3)
            k = rng.randint(1, 3 if d == 2 else 2)
            s = Structure.create(
                d,
                {"R": [t for t in product(range(d), repeat=2) if rng.random() < 0.4]},
                {"R": 2},
            )
            r = {tuple(rng.randrange(d) for _ in range(k)) for _ in range(rng.randint(1, 4))}
            once = pp_closure(s, r, k)
            assert frozenset(r) <= once
            if len(once) <= 6:
                assert pp_closure(s, once, k) == once
                reclosed += 1
        assert reclosed > 0
