"""Tests for cycle obstructions."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import ClosedPath, Instance, Structure
from cspalgebra.engine.consistency import (
    cycle_consistency_audit,
    good_witness,
    is_acyclic,
    iter_closed_paths,
)
from cspalgebra.engine.core import is_homomorphism
from cspalgebra.engine.exceptions import PreconditionError
from cspalgebra.engine.obstruction import (
    PATH_NAME,
    cycle_obstruction_lift,
    fiber_relation,
    verify_lift,
)
from cspalgebra.fixtures.catalog import EDGE, directed_cycle, k2


def ring(n, signature):
    return Instance.create(n, signature, {EDGE: [(i, (i + 1) % n) for i in range(n)]})


def failing_path(x, s):
    return cycle_consistency_audit(x, s, good_witness(x, s)).path


def exhaustive(obstruction):
    """(has a solution, has a solution constant on the fiber) by enumeration."""
    y = obstruction.lift.instance
    s = obstruction.template
    solvable = constant = False
    for values in product(s.elements, repeat=y.variable_count):
        if is_homomorphism(values, y, s):
            solvable = True
            if len({values[v] for v in obstruction.fiber}) == 1:
                constant = True
    return solvable, constant


class TestCycleObstructionLift:
    """Tests for cycle_obstruction_lift."""

    def test_triangle_over_k2(self):
        x = ring(3, k2().signature)
        obstruction = cycle_obstruction_lift(x, k2(), failing_path(x, k2()))
        y = obstruction.lift.instance
        assert y.variable_count == 4
        assert obstruction.distinguished == 0
        assert obstruction.fiber == (0, 3)
        assert obstruction.materialized == (PATH_NAME,)
        assert is_acyclic(y)
        assert verify_lift(obstruction.lift, obstruction.target)
        assert exhaustive(obstruction) == (True, False)

    def test_fiber_relation(self):
        x = ring(3, k2().signature)
        obstruction = cycle_obstruction_lift(x, k2(), failing_path(x, k2()))
        assert fiber_relation(obstruction) == {(0, 1), (1, 0)}

    def test_directed_four_cycle(self):
        s = directed_cycle()
        x = ring(4, s.signature)
        obstruction = cycle_obstruction_lift(x, s, failing_path(x, s))
        assert exhaustive(obstruction) == (True, False)

    def test_target_extends_instance(self):
        x = ring(3, k2().signature)
        obstruction = cycle_obstruction_lift(x, k2(), failing_path(x, k2()))
        assert obstruction.target.relation(EDGE) == x.relation(EDGE)
        assert obstruction.target.relation(PATH_NAME) == frozenset()
        assert obstruction.template.relation(PATH_NAME) == frozenset()

    def test_empty_path(self):
        x = ring(3, k2().signature)
        with pytest.raises(PreconditionError, match="path does not witness cycle-inconsistency"):
            cycle_obstruction_lift(x, k2(), ClosedPath((0,), ()))

    def test_consistent_square(self):
        x = ring(4, k2().signature)
        square = next(iter_closed_paths(x))
        with pytest.raises(PreconditionError, match="path does not witness"):
            cycle_obstruction_lift(x, k2(), square)

    def test_not_arc_consistent(self):
        s = Structure.create(2, {EDGE: k2().relation(EDGE), "U0": [(0,)]})
        x = Instance.create(3, s.signature, {EDGE: [(0, 1), (1, 2), (2, 0)], "U0": [(0,)]})
        with pytest.raises(PreconditionError):
            cycle_obstruction_lift(x, s, failing_path(ring(3, k2().signature), k2()))

    def test_random_instances(self):
        """Every obstruction built is a solvable tree with no fiber-constant solution."""
        rng = random.Random(41)
        for _ in range(200):
            d = rng.randint(2, 3)
            s = Structure.create(
                d,
                {
                    "A": [(a,) for a in range(d) if rng.random() < 0.7],
                    "B": [t for t in product(range(d), repeat=2) if rng.random() < 0.5],
                },
                {"A": 1, "B": 2},
            )
            n = rng.randint(2, 4)
            x = Instance.create(
                n,
                s.signature,
                {
                    "A": [(rng.randrange(n),) for _ in range(rng.randint(0, 1))],
                    "B": [tuple(rng.randrange(n) for _ in range(2)) for _ in range(rng.randint(2, 4))],
                },
            )
            w = good_witness(x, s)
            if w is None:
                continue
            audit = cycle_consistency_audit(x, s, w)
            if audit.passed:
                continue
            try:
                obstruction = cycle_obstruction_lift(x, s, audit.path)
            except PreconditionError:
                continue
            assert is_acyclic(obstruction.lift.instance)
            assert verify_lift(obstruction.lift, obstruction.target)
            if d ** obstruction.lift.instance.variable_count <= 20_000:
                assert exhaustive(obstruction) == (True, False)
