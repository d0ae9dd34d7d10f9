"""Explicit simple constructions as chains of steps.

A chain starts at a template and applies its steps in order; every step
produces the next structure. Compiling an instance over the last structure
runs the step compilers from the last step back to the first, so the result
is an instance over the starting template.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Protocol

from cspalgebra.domain.models import (
    Assignment,
    Instance,
    SimpleInterpretation,
    Structure,
    VariableOrigin,
)
from cspalgebra.engine.construction.interpretation import (
    reduce_interpretation,
    validate_interpretation,
)
from cspalgebra.engine.construction.reduction import CompiledReduction, ComposedReduction
from cspalgebra.engine.construction.singleton import compile_singletons, ensure_eq_relations
from cspalgebra.engine.core.homomorphism import find_homomorphism
from cspalgebra.engine.core.products import singleton_expansion
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.exceptions import PreconditionError

logger = logging.getLogger(__name__)


class EquivalenceReduction(CompiledReduction):
    """The same instance read over a homomorphically equivalent template."""

    kind = "equivalence"

    def __init__(
        self,
        x: Instance,
        source_template: Structure,
        template: Structure,
        forward: tuple[int, ...],
        backward: tuple[int, ...],
    ) -> None:
        self._forward = forward
        self._backward = backward
        provenance = [VariableOrigin("same", source_variable=v) for v in x.variables]
        super().__init__(x, source_template, x, template, provenance, 1)

    def _push(self, g: Assignment) -> list[int]:
        return [self._forward[a] for a in g]

    def _pull(self, h: Assignment) -> list[int]:
        return [self._backward[a] for a in h]


@dataclass(frozen=True)
class BoundStep:
    """A step applied to a concrete structure."""

    source: Structure
    result: Structure
    compiler: Callable[[Instance], CompiledReduction] = field(repr=False)

    def compile(self, x: Instance) -> CompiledReduction:
        """Instance over source from an instance over result."""
        return self.compiler(x)


class Step(Protocol):
    """One construction step from a structure to the next."""

    def bind(self, s: Structure) -> BoundStep: ...


@dataclass(frozen=True)
class InterpretStep:
    """Pass to the structure an interpretation defines in a power."""

    interpretation: SimpleInterpretation

    def bind(self, s: Structure) -> BoundStep:
        built = validate_interpretation(s, self.interpretation)
        return BoundStep(s, built, lambda x: reduce_interpretation(x, s, self.interpretation))


@dataclass(frozen=True)
class EquivalenceStep:
    """Replace the structure by a homomorphically equivalent one.

    The homomorphisms both ways are found when the step is bound.
    """

    target: Structure

    def bind(self, s: Structure) -> BoundStep:
        require_same_signature(s, self.target)
        to_target = find_homomorphism(s.as_instance(), self.target)
        to_source = find_homomorphism(self.target.as_instance(), s)
        if to_target is None or to_source is None:
            raise PreconditionError("structures are not homomorphically equivalent")
        target = self.target
        forward, backward = to_source.values, to_target.values
        return BoundStep(
            s, target, lambda x: EquivalenceReduction(x, target, s, forward, backward)
        )


@dataclass(frozen=True)
class SingletonStep:
    """Add a singleton unary relation for every element of a core."""

    def bind(self, s: Structure) -> BoundStep:
        ensure_eq_relations(s)
        return BoundStep(s, singleton_expansion(s), lambda x: compile_singletons(x, s))


class ConstructionChain:
    """A template and the steps constructing a structure from it.

    The intermediate structures are built, and checked, once when the chain
    is created.
    """

    def __init__(self, template: Structure, steps: Sequence[Step]) -> None:
        self.template = template
        self.steps = tuple(steps)
        self.bound: list[BoundStep] = []
        current = template
        for i, step in enumerate(self.steps):
            self.bound.append(step.bind(current))
            current = self.bound[-1].result
            logger.debug(
                "chain step %d (%s): %d elements",
                i,
                type(step).__name__,
                current.domain_size,
            )

    @property
    def structures(self) -> list[Structure]:
        """The template followed by the structure after each step."""
        return [self.template] + [b.result for b in self.bound]

    @property
    def result(self) -> Structure:
        return self.bound[-1].result if self.bound else self.template

    def compile(self, x: Instance) -> CompiledReduction:
        """Compile an instance over the constructed structure to one over the template.

        Raises:
            PreconditionError: If the chain has no steps.
            SignatureMismatchError: If x is not over the constructed structure.
        """
        if not self.steps:
            raise PreconditionError("construction chain has no steps")
        require_same_signature(x, self.result)
        parts: list[CompiledReduction] = []
        current = x
        for bound in reversed(self.bound):
            part = bound.compile(current)
            parts.append(part)
            current = part.output
        if len(parts) == 1:
            return parts[0]
        return ComposedReduction(parts)
