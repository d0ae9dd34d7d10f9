"""Solver front-end.

Strategies are tried in order, each behind SolverProtocol:
1. width-1 extraction when the template has a totally symmetric extractor
2. closure propagation when the dual discriminator preserves the template
3. the offset pass for the rock-paper-scissors template
4. complete backtracking search
A strategy that cannot decide an instance raises InconclusiveError and
the next one is tried.
"""

import logging
from dataclasses import dataclass, field

from cspalgebra.domain.models import Assignment, Instance, Operation, Status, Structure
from cspalgebra.domain.protocols import SolverProtocol
from cspalgebra.domain_service.classify import is_width1
from cspalgebra.engine.consistency import width1_solve
from cspalgebra.engine.core import find_homomorphism, is_homomorphism
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.dual_discriminator import dual_discriminator_solve, rps_relations, rps_solve
from cspalgebra.engine.exceptions import (
    CapExceededError,
    DecompositionError,
    InconclusiveError,
    VerificationError,
)
from cspalgebra.engine.polymorphism import check_dual_discriminator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Width1Strategy:
    template: Structure
    extractor: Operation
    name: str = "width1"

    def solve(self, instance: Instance) -> Assignment | None:
        return width1_solve(instance, self.template, self.extractor)


@dataclass(frozen=True)
class DualDiscriminatorStrategy:
    template: Structure
    name: str = "dual-discriminator"

    def solve(self, instance: Instance) -> Assignment | None:
        try:
            return dual_discriminator_solve(instance, self.template)
        except DecompositionError as e:
            raise InconclusiveError(f"decomposition failed: {e}") from e


@dataclass(frozen=True)
class RockPaperScissorsStrategy:
    template: Structure
    name: str = "rock-paper-scissors"

    def solve(self, instance: Instance) -> Assignment | None:
        return rps_solve(instance, self.template)


@dataclass(frozen=True)
class SearchStrategy:
    template: Structure
    order: str | None = None
    node_cap: int | None = None
    name: str = "search"

    def solve(self, instance: Instance) -> Assignment | None:
        return find_homomorphism(instance, self.template, order=self.order, node_cap=self.node_cap)


@dataclass(frozen=True)
class SolveOutcome:
    """A solution (or None for unsolvable) and the strategy that decided it."""

    solution: Assignment | None
    strategy: str
    attempted: tuple[str, ...] = field(default=())

    @property
    def solved(self) -> bool:
        return self.solution is not None


def select_strategies(
    s: Structure,
    *,
    order: str | None = None,
    cap: int | None = None,
    node_cap: int | None = None,
) -> list[SolverProtocol]:
    """Strategies applicable to s, most specific first; search is always last."""
    strategies: list[SolverProtocol] = []
    width1 = is_width1(s, cap)
    if width1.status is Status.YES and width1.witness is not None:
        strategies.append(Width1Strategy(s, width1.witness.operation()))
    if check_dual_discriminator(s):
        strategies.append(DualDiscriminatorStrategy(s))
    if rps_relations(s) is not None:
        strategies.append(RockPaperScissorsStrategy(s))
    strategies.append(SearchStrategy(s, order, node_cap))
    logger.debug("strategies: %s", ", ".join(st.name for st in strategies))
    return strategies


class SolverService:
    """Solve instances of one template with the strategies that apply to it."""

    def __init__(
        self,
        template: Structure,
        strategies: list[SolverProtocol] | None = None,
        *,
        order: str | None = None,
        cap: int | None = None,
    ) -> None:
        """Initialize the service.

        Args:
            template: Template every instance is solved over.
            strategies: Explicit strategy list; selected from the template when omitted.
            order: Variable order for the search strategy.
            cap: Cap for the width-1 extractor search.
        """
        self.template = template
        self.strategies = (
            strategies if strategies is not None else select_strategies(template, order=order, cap=cap)
        )

    def solve(self, instance: Instance) -> SolveOutcome:
        """Solve with the first strategy that decides the instance.

        Raises:
            SignatureMismatchError: If the instance is over another signature.
            CapExceededError: If the deciding strategy hits a cap.
            InconclusiveError: If no strategy decides the instance.
        """
        require_same_signature(instance, self.template)
        attempted: list[str] = []
        for strategy in self.strategies:
            attempted.append(strategy.name)
            try:
                solution = strategy.solve(instance)
            except InconclusiveError as e:
                logger.info("%s inconclusive: %s", strategy.name, e)
                continue
            if solution is not None and not is_homomorphism(solution, instance, self.template):
                raise VerificationError(f"{strategy.name} returned a non-solution")
            logger.info(
                "%s: %s", strategy.name, "solved" if solution is not None else "unsolvable"
            )
            return SolveOutcome(solution, strategy.name, tuple(attempted))
        raise InconclusiveError(f"no strategy decided the instance (tried {', '.join(attempted)})")


def solve(
    x: Instance, s: Structure, *, order: str | None = None, cap: int | None = None
) -> SolveOutcome:
    """One-shot solve through a fresh SolverService."""
    try:
        return SolverService(s, order=order, cap=cap).solve(x)
    except CapExceededError:
        logger.info("solve refused by a cap")
        raise
