"""Solving arc-consistent instances with a totally symmetric polymorphism."""

import logging

from cspalgebra.domain.models import Assignment, Instance, Operation, Structure
from cspalgebra.engine.consistency.arc import good_witness
from cspalgebra.engine.core.homomorphism import is_homomorphism
from cspalgebra.engine.exceptions import InvalidExtractorError, VerificationError
from cspalgebra.engine.polymorphism.preservation import preserves
from cspalgebra.engine.polymorphism.symmetric import depends_only_on_set

logger = logging.getLogger(__name__)


def required_arity(s: Structure) -> int:
    """|D| times the largest relation arity."""
    return s.domain_size * max(1, s.max_arity)


def validate_extractor(ts: Operation, s: Structure) -> None:
    """Raises InvalidExtractorError unless ts can extract solutions for s."""
    if (
        ts.domain_size != s.domain_size
        or ts.arity < required_arity(s)
        or not depends_only_on_set(ts)
        or not preserves(ts, s)
    ):
        raise InvalidExtractorError("not a valid extractor")


def padded(values: tuple[int, ...], n: int) -> tuple[int, ...]:
    """The values repeated cyclically to length n."""
    return tuple(values[i % len(values)] for i in range(n))


def width1_solve(x: Instance, s: Structure, ts: Operation) -> Assignment | None:
    """Apply ts to the arc-consistent value set of every variable.

    Returns:
        A verified solution, or None when arc consistency empties a variable.

    Raises:
        InvalidExtractorError: If ts is not a totally symmetric polymorphism
            of arity at least |D| times the largest arity.
    """
    validate_extractor(ts, s)
    witness = good_witness(x, s)
    if witness is None:
        logger.debug("width-1 solve: no good witness")
        return None
    values = tuple(ts(*padded(witness.allowed(v), ts.arity)) for v in x.variables)
    if not is_homomorphism(values, x, s):
        raise VerificationError("extracted assignment is not a solution")
    return Assignment(values)
