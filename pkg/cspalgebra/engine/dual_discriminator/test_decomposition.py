"""Tests for dual-discriminator decomposition."""

import pytest

from cspalgebra.engine.dual_discriminator import (
    DisjunctionAtom,
    PermutationAtom,
    UnaryAtom,
    decompose_relation,
    decompose_template,
)
from cspalgebra.engine.exceptions import DecompositionError, PreconditionError
from cspalgebra.fixtures.catalog import directed_cycle, disjunctions, nae, two_sat


class TestDecomposeRelation:
    """Tests for decompose_relation."""

    def test_not_equal_is_a_swap(self):
        assert decompose_relation({(0, 1), (1, 0)}, 2, 2) == (PermutationAtom(0, 1, (1, 0)),)

    def test_two_clause(self):
        assert decompose_relation(two_sat().relation("C0"), 2, 2) == (DisjunctionAtom(0, 1, 1, 1),)

    def test_product_needs_only_unaries(self):
        atoms = decompose_relation({(0, 1), (0, 2)}, 2, 3)
        assert set(atoms) == {UnaryAtom(0, frozenset({0})), UnaryAtom(1, frozenset({1, 2}))}

    def test_partial_bijection_is_extended(self):
        (atom,) = [a for a in decompose_relation({(0, 1), (1, 2)}, 2, 3) if isinstance(a, PermutationAtom)]
        assert atom.permutation[:2] == (1, 2)
        assert sorted(atom.permutation) == [0, 1, 2]
        assert atom.inverse()[1] == 0

    def test_empty_relation(self):
        assert decompose_relation(set(), 2, 2) == (UnaryAtom(0, frozenset()),)

    def test_ternary_with_dual_discriminator(self):
        s = disjunctions()
        atoms = decompose_relation(s.relation("T"), 3, 3)
        assert any(isinstance(a, PermutationAtom) for a in atoms)
        assert any(isinstance(a, DisjunctionAtom) for a in atoms)

    def test_not_all_equal_fails(self):
        with pytest.raises(DecompositionError):
            decompose_relation(nae().relation("NAE"), 3, 2)


class TestDecomposeTemplate:
    """Tests for decompose_template."""

    def test_directed_cycle(self):
        atoms = decompose_template(directed_cycle(3))
        assert list(atoms) == ["E"]
        assert all(isinstance(a, PermutationAtom) for a in atoms["E"])

    def test_requires_dual_discriminator(self):
        with pytest.raises(PreconditionError):
            decompose_template(nae())
