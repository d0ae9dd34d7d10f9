"""Boundary predicates of the edge-colouring gadgets.

Coding edges come in pairs; a pair "agrees" when both edges get the same
colour. All predicates here are closed under permutations of the colours.
"""

from collections.abc import Iterator, Sequence
from itertools import product

from cspalgebra.domain.models import COLORS, BoundaryPredicate


def third(a: int, b: int) -> int:
    """The colour different from two distinct colours."""
    return 3 - a - b


def pair_agreement(pattern: Sequence[int]) -> list[bool]:
    return [pattern[i] == pattern[i + 1] for i in range(0, len(pattern), 2)]


class InverterPredicate(BoundaryPredicate):
    """(a, b, c, d, e): a = b with c, d, e distinct, or c = d with a, b, e distinct."""

    arity = 5
    description = "exactly one of the pairs (a,b), (c,d) agrees; e completes the other"

    def admits(self, pattern: Sequence[int]) -> bool:
        a, b, c, d, e = pattern
        return (a == b and len({c, d, e}) == 3) or (c == d and len({a, b, e}) == 3)


class RingPredicate(BoundaryPredicate):
    """Pendant colours around a 7-cycle whose last vertex has no pendant.

    An edge of the cycle entering a vertex with pendant colour x in colour
    c != x leaves it in the third colour of (x, c); the pattern is admitted
    when some starting colour returns to the degree-two vertex with a
    different colour.
    """

    arity = 6
    description = "pendants on a seven-cycle admit a proper colouring"

    def admits(self, pattern: Sequence[int]) -> bool:
        for start in range(COLORS):
            color = start
            for x in pattern:
                if color == x:
                    break
                color = third(x, color)
            else:
                if color != start:
                    return True
        return False


class SomePairAgrees(BoundaryPredicate):
    """At least one coding pair agrees."""

    def __init__(self, pairs: int) -> None:
        self.arity = 2 * pairs
        self.description = f"some of {pairs} pairs agrees"

    def admits(self, pattern: Sequence[int]) -> bool:
        return any(pair_agreement(pattern))


class AllOrNothing(BoundaryPredicate):
    """Every pair agrees or every pair disagrees."""

    def __init__(self, pairs: int) -> None:
        self.pairs = pairs
        self.arity = 2 * pairs
        self.description = f"all {pairs} pairs agree or all disagree"

    def admits(self, pattern: Sequence[int]) -> bool:
        agreement = pair_agreement(pattern)
        return all(agreement) or not any(agreement)

    def patterns(self) -> Iterator[tuple[int, ...]]:
        agree = [(c, c) for c in range(COLORS)]
        disagree = [(a, b) for a in range(COLORS) for b in range(COLORS) if a != b]
        for choices in (agree, disagree):
            for pairs in product(choices, repeat=self.pairs):
                yield tuple(c for pair in pairs for c in pair)
