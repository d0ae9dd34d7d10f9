"""Solver strategy Protocol."""

from typing import Protocol

from cspalgebra.domain.models import Assignment, Instance


class SolverProtocol(Protocol):
    """Protocol for template-specific solving strategies."""

    @property
    def name(self) -> str:
        """Short name reported with the solution."""
        ...

    def solve(self, instance: Instance) -> Assignment | None:
        """Solve an instance of the strategy's template.

        Args:
            instance: Instance in the template's signature.

        Returns:
            A verified solution, or None when the instance is unsolvable.

        Raises:
            InconclusiveError: If the strategy cannot decide this instance.
        """
        ...
