"""Compiled instances with verified solution translations."""

import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence

from cspalgebra.domain.models import (
    Assignment,
    Instance,
    ReductionCertificate,
    Structure,
    VariableOrigin,
)
from cspalgebra.engine.core.homomorphism import is_homomorphism
from cspalgebra.engine.exceptions import (
    PreconditionError,
    ValueOutOfRangeError,
    VerificationError,
)

logger = logging.getLogger(__name__)


def max_degree(x: Instance) -> int:
    return max(x.occurrences(), default=0)


def _is_solution(f: Assignment, x: Instance, s: Structure) -> bool:
    try:
        return is_homomorphism(f, x, s)
    except ValueOutOfRangeError:
        return False


class CompiledReduction(ABC):
    """A source instance over one template compiled to an instance over another.

    Both translations check their input and re-verify their output.
    """

    kind: str = "reduction"

    def __init__(
        self,
        source: Instance,
        source_template: Structure,
        output: Instance,
        output_template: Structure,
        provenance: Sequence[VariableOrigin],
        degree_multiplier: int,
        notes: Sequence[str] = (),
        steps: Sequence[ReductionCertificate] = (),
    ) -> None:
        self.source = source
        self.source_template = source_template
        self.output = output
        self.output_template = output_template
        self.certificate = ReductionCertificate(
            kind=self.kind,
            source_variable_count=source.variable_count,
            output_variable_count=output.variable_count,
            provenance=tuple(provenance),
            degree_multiplier=degree_multiplier,
            max_input_degree=max_degree(source),
            max_output_degree=max_degree(output),
            notes=tuple(notes),
            steps=tuple(steps),
        )
        if len(self.certificate.provenance) != output.variable_count:
            raise VerificationError(f"{self.kind}: provenance does not cover the output")
        if not self.certificate.degree_bound_holds:
            raise VerificationError(
                f"{self.kind}: output degree {self.certificate.max_output_degree} exceeds "
                f"{degree_multiplier} x {self.certificate.max_input_degree}"
            )
        logger.debug(
            "%s: %d -> %d variables, N=%d",
            self.kind,
            source.variable_count,
            output.variable_count,
            degree_multiplier,
        )

    @abstractmethod
    def _push(self, g: Assignment) -> Sequence[int]: ...

    @abstractmethod
    def _pull(self, h: Assignment) -> Sequence[int]: ...

    def pushforward(self, solution: Assignment) -> Assignment:
        """Solution of the output built from a solution of the source.

        Raises:
            PreconditionError: If the input is not a solution of the source.
            VerificationError: If the translated assignment is not a solution.
        """
        if not _is_solution(solution, self.source, self.source_template):
            raise PreconditionError(f"{self.kind}: not a solution of the source instance")
        result = Assignment(tuple(int(v) for v in self._push(solution)))
        if not _is_solution(result, self.output, self.output_template):
            raise VerificationError(f"{self.kind}: pushforward is not a solution")
        return result

    def pullback(self, solution: Assignment) -> Assignment:
        """Solution of the source read off a solution of the output.

        Raises:
            PreconditionError: If the input is not a solution of the output.
            VerificationError: If the translated assignment is not a solution.
        """
        if not _is_solution(solution, self.output, self.output_template):
            raise PreconditionError(f"{self.kind}: not a solution of the compiled instance")
        result = Assignment(tuple(int(v) for v in self._pull(solution)))
        if not _is_solution(result, self.source, self.source_template):
            raise VerificationError(f"{self.kind}: pullback is not a solution")
        return result


class ComposedReduction(CompiledReduction):
    """Reductions applied one after another; parts[0] consumes the source."""

    kind = "chain"

    def __init__(self, parts: Sequence[CompiledReduction], notes: Sequence[str] = ()) -> None:
        if not parts:
            raise PreconditionError("a composed reduction needs at least one part")
        for before, after in zip(parts, parts[1:]):
            if after.source != before.output:
                raise PreconditionError("composed reductions do not chain")
        self.parts = tuple(parts)
        multiplier = 1
        for part in parts:
            multiplier *= part.certificate.degree_multiplier
        last = parts[-1]
        super().__init__(
            parts[0].source,
            parts[0].source_template,
            last.output,
            last.output_template,
            last.certificate.provenance,
            multiplier,
            notes=notes,
            steps=[part.certificate for part in parts],
        )

    def _push(self, g: Assignment) -> Sequence[int]:
        for part in self.parts:
            g = part.pushforward(g)
        return g.values

    def _pull(self, h: Assignment) -> Sequence[int]:
        for part in reversed(self.parts):
            h = part.pullback(h)
        return h.values
