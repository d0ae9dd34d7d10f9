"""Tests for the solver front-end."""

import random

import pytest

from cspalgebra.domain.models import Instance
from cspalgebra.domain_service import SolverService, select_strategies, solve
from cspalgebra.engine.core import is_homomorphism
from cspalgebra.engine.exceptions import InconclusiveError, SignatureMismatchError
from cspalgebra.fixtures.catalog import EDGE, disjunctions, horn, k2, k3, rock_paper_scissors, two_sat


class Undecided:
    name = "undecided"

    def solve(self, instance):
        raise InconclusiveError("never decides")


def random_horn_instance(rng: random.Random, n: int) -> Instance:
    return Instance.create(
        n,
        horn().signature,
        {
            "U0": [(rng.randrange(n),) for _ in range(rng.randint(0, 2))],
            "U1": [(rng.randrange(n),) for _ in range(rng.randint(0, 3))],
            "H": [tuple(rng.randrange(n) for _ in range(3)) for _ in range(rng.randint(1, n))],
        },
    )


class TestSelectStrategies:
    """Tests for select_strategies."""

    def test_horn_uses_width1(self):
        assert [st.name for st in select_strategies(horn())][0] == "width1"

    def test_two_sat_uses_propagation(self):
        assert [st.name for st in select_strategies(two_sat())] == ["dual-discriminator", "search"]

    def test_rock_paper_scissors(self):
        assert "rock-paper-scissors" in [st.name for st in select_strategies(rock_paper_scissors())]

    def test_search_is_last(self):
        for fixture in (k3, disjunctions, horn):
            assert select_strategies(fixture())[-1].name == "search"


class TestSolverService:
    """Tests for SolverService."""

    def test_horn_instances_agree_with_search(self):
        rng = random.Random(3)
        service = SolverService(horn())
        search = SolverService(horn(), select_strategies(horn())[-1:])
        for _ in range(60):
            x = random_horn_instance(rng, rng.randint(1, 12))
            outcome = service.solve(x)
            assert outcome.strategy == "width1"
            assert outcome.solved == search.solve(x).solved
            if outcome.solved:
                assert is_homomorphism(outcome.solution, x, horn())

    def test_unsolvable_triangle_over_k2(self):
        x = Instance.create(3, k2().signature, {EDGE: [(0, 1), (1, 2), (2, 0)]})
        outcome = solve(x, k2())
        assert not outcome.solved

    def test_inconclusive_strategy_is_skipped(self):
        service = SolverService(k3(), [Undecided(), *select_strategies(k3())])
        x = Instance.create(2, k3().signature, {EDGE: [(0, 1)]})
        outcome = service.solve(x)
        assert outcome.strategy == "search"
        assert outcome.attempted == ("undecided", "search")

    def test_no_strategy_decides(self):
        service = SolverService(k3(), [Undecided()])
        with pytest.raises(InconclusiveError):
            service.solve(Instance.create(1, k3().signature, {}))

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            solve(Instance.create(1, horn().signature, {}), k3())
