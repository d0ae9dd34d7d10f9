"""Tests for width-1 solving."""

import random
from itertools import product

import pytest

from cspalgebra.domain.models import Instance
from cspalgebra.engine.consistency import required_arity, width1_solve
from cspalgebra.engine.consistency.width1 import padded
from cspalgebra.engine.core import find_homomorphism, is_homomorphism
from cspalgebra.engine.exceptions import InvalidExtractorError
from cspalgebra.engine.polymorphism import check_totally_symmetric, operations
from cspalgebra.fixtures.catalog import horn, horn_implication, two_sat

AND4 = operations.minimum(2, 4)


def implication_instance(variable_count, **constraints):
    return Instance.create(variable_count, horn_implication().signature, constraints)


def random_horn_instance(rng):
    n = rng.randint(2, 30)
    return Instance.create(
        n,
        horn().signature,
        {
            "U0": [(rng.randrange(n),) for _ in range(rng.randint(0, 3))],
            "U1": [(rng.randrange(n),) for _ in range(rng.randint(0, 4))],
            "H": [tuple(rng.randrange(n) for _ in range(3)) for _ in range(rng.randint(1, 2 * n))],
        },
    )


def least_model(x):
    """Forward chaining from the U1 facts; None when a U0 variable is forced to 1."""
    true = {v for (v,) in x.relation("U1")}
    changed = True
    while changed:
        changed = False
        for a, b, c in x.relation("H"):
            if a in true and b in true and c not in true:
                true.add(c)
                changed = True
    if any(v in true for (v,) in x.relation("U0")):
        return None
    return tuple(int(v in true) for v in range(x.variable_count))


def horn_instances(rng, *, solvable, count):
    found = []
    while len(found) < count:
        x = random_horn_instance(rng)
        if (least_model(x) is not None) == solvable:
            found.append(x)
    return found


class TestWidth1Solve:
    """Tests for width1_solve."""

    def test_required_arity(self):
        assert required_arity(horn_implication()) == 4
        assert required_arity(horn()) == 6

    def test_unit_propagation(self):
        x = implication_instance(2, U1=[(0,)], I=[(0, 1)])
        assert width1_solve(x, horn_implication(), AND4).values == (1, 1)

    def test_unsatisfiable(self):
        x = implication_instance(1, U0=[(0,)], U1=[(0,)])
        assert width1_solve(x, horn_implication(), AND4) is None

    def test_unconstrained_variable(self):
        """AND(0, 1, 0, 1) = 0."""
        assert width1_solve(implication_instance(1), horn_implication(), AND4).values == (0,)

    def test_searched_extractor(self):
        ts = check_totally_symmetric(horn_implication(), 4).operation()
        x = implication_instance(3, U1=[(0,)], I=[(0, 1), (2, 1)])
        solution = width1_solve(x, horn_implication(), ts)
        assert is_homomorphism(solution, x, horn_implication())

    def test_arity_too_small(self):
        with pytest.raises(InvalidExtractorError, match="not a valid extractor"):
            width1_solve(implication_instance(1), horn_implication(), operations.minimum(2, 3))

    def test_not_symmetric(self):
        with pytest.raises(InvalidExtractorError):
            width1_solve(implication_instance(1), horn_implication(), operations.projection(2, 4, 0))

    def test_not_a_polymorphism(self):
        x = Instance.create(1, two_sat().signature, {})
        with pytest.raises(InvalidExtractorError):
            width1_solve(x, two_sat(), AND4)

    def test_padding_only_matters_up_to_the_set(self):
        """A totally symmetric operation sees the same set however it is padded."""
        assert padded((0, 1), 4) == (0, 1, 0, 1)
        assert padded((1,), 3) == (1, 1, 1)
        for values in [(0, 1, 0, 1), (0, 0, 0, 1), (1, 1, 0, 1), (1, 0, 0, 0)]:
            assert AND4(*values) == AND4(*padded((0, 1), 4))

    def test_solves_random_solvable_horn(self):
        rng = random.Random(11)
        and6 = operations.minimum(2, 6)
        instances = horn_instances(rng, solvable=True, count=100)
        assert len(instances) == 100
        for x in instances:
            solution = width1_solve(x, horn(), and6)
            assert solution is not None
            assert is_homomorphism(solution, x, horn())
            assert find_homomorphism(x, horn()) is not None

    def test_refuses_random_unsolvable_horn(self):
        rng = random.Random(13)
        and6 = operations.minimum(2, 6)
        instances = horn_instances(rng, solvable=False, count=100)
        assert len(instances) == 100
        for x in instances:
            assert width1_solve(x, horn(), and6) is None
            assert find_homomorphism(x, horn()) is None

    def test_least_model_oracle(self):
        """Forward chaining matches enumeration on small instances."""
        rng = random.Random(5)
        for _ in range(50):
            x = random_horn_instance(rng)
            if x.variable_count > 10:
                continue
            model = least_model(x)
            solvable = any(
                is_homomorphism(f, x, horn()) for f in product((0, 1), repeat=x.variable_count)
            )
            assert (model is None) != solvable
            if model is not None:
                assert is_homomorphism(model, x, horn())
