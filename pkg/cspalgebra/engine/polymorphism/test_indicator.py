"""Tests for the indicator construction."""

from itertools import product

import numpy as np
import pytest

from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.engine.polymorphism import identities, indicator_instance
from cspalgebra.engine.polymorphism.indicator import build_layout, component_labels
from cspalgebra.fixtures.catalog import k2, k3, two_sat


class TestComponentLabels:
    """Tests for component_labels."""

    def test_chain_and_isolated(self):
        """Vertices joined by edges share their least member."""
        u = np.array([4, 1, 3], dtype=np.int64)
        v = np.array([3, 0, 1], dtype=np.int64)
        assert component_labels(6, u, v).tolist() == [0, 0, 2, 0, 0, 5]

    def test_no_edges(self):
        assert component_labels(3, np.zeros(0, np.int64), np.zeros(0, np.int64)).tolist() == [0, 1, 2]


class TestBuildLayout:
    """Tests for identity merging."""

    def test_siggers_merges_pairs(self):
        """Every (r,a,r,e) shares a class with (a,r,e,a)."""
        layout = build_layout(k3(), identities.siggers())
        assert layout.raw_count == 81
        for r, a, e in product(range(3), repeat=3):
            assert layout.variable("f", (r, a, r, e)) == layout.variable("f", (a, r, e, a))
        assert layout.class_count < 81

    def test_commutative_on_two_elements(self):
        """The swap has three orbits on {0,1}^2."""
        layout = build_layout(k2(), identities.cyclic(2))
        assert layout.class_count == 3
        assert layout.variable("c", (0, 1)) == layout.variable("c", (1, 0))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            build_layout(k3(), identities.siggers(), cap=80)


class TestIndicatorInstance:
    """Tests for indicator_instance."""

    def test_unary_indicator_is_the_structure(self):
        """With one unary symbol and no identities the indicator is s itself."""
        instance, layout = indicator_instance(k3(), identities.empty(1))
        assert instance.variable_count == 3
        assert instance.tables == k3().tables
        assert layout.class_count == 3

    def test_binary_indicator_of_two_sat(self):
        """The binary indicator is the square of the template."""
        s = two_sat()
        instance, _ = indicator_instance(s, identities.empty(2))
        assert instance.variable_count == 4
        for index, table in enumerate(s.tables):
            assert len(instance.tables[index]) == len(table) ** 2

    def test_decode_roundtrip(self):
        """Decoding class values gives operations indexed by argument tuples."""
        _, layout = indicator_instance(k2(), identities.cyclic(2))
        values = np.zeros(layout.class_count, dtype=np.int64)
        values[layout.variable("c", (0, 1))] = 1
        op = layout.decode(values)["c"]
        assert op(0, 1) == op(1, 0) == 1
        assert op(0, 0) == op(1, 1) == 0
