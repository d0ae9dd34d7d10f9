"""Solving instances of templates with a dual discriminator polymorphism.

After decomposition every constraint is a unary set, a disjunction
x = a or y = b, or a bijection y = g(x). A partial assignment is closed
when it respects the unary sets, forces y = b whenever some x with a
disjunction on it takes a value other than a, and follows every
bijection in both directions. The solver closes {x -> a} for the first
uncovered variable x and the least value a giving a consistent closure,
and keeps the values of earlier closures where closures overlap. The
result is a solution exactly when one exists.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

from cspalgebra.domain.models import Assignment, Instance, Structure
from cspalgebra.engine.core.homomorphism import is_homomorphism
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.dual_discriminator.decomposition import (
    Atom,
    DisjunctionAtom,
    PermutationAtom,
    UnaryAtom,
    decompose_template,
    instance_atoms,
)
from cspalgebra.engine.exceptions import VerificationError

logger = logging.getLogger(__name__)


@dataclass
class _Rules:
    """Per-variable propagation rules compiled from the atoms."""

    allowed: list[set[int]]
    # (a, y, b): if this variable is not a then y = b
    unless: list[list[tuple[int, int, int]]] = field(default_factory=list)
    # (g, y): y = g[value]
    maps: list[list[tuple[tuple[int, ...], int]]] = field(default_factory=list)

    @classmethod
    def compile(cls, n: int, domain_size: int, atoms: list[Atom]) -> "_Rules":
        rules = cls([set(range(domain_size)) for _ in range(n)])
        rules.unless = [[] for _ in range(n)]
        rules.maps = [[] for _ in range(n)]
        for atom in atoms:
            match atom:
                case UnaryAtom(v, allowed):
                    rules.allowed[v] &= allowed
                case DisjunctionAtom(u, v, a, b):
                    rules.unless[u].append((a, v, b))
                    rules.unless[v].append((b, u, a))
                case PermutationAtom(u, v, g):
                    rules.maps[u].append((g, v))
                    rules.maps[v].append((atom.inverse(), u))
        return rules

    def closure(self, start: int, value: int) -> dict[int, int] | None:
        """Least closed partial assignment containing start -> value, or None."""
        f = {start: value}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            c = f[u]
            if c not in self.allowed[u]:
                return None
            forced = [(v, b) for a, v, b in self.unless[u] if c != a]
            forced += [(v, g[c]) for g, v in self.maps[u]]
            for v, b in forced:
                if v in f:
                    if f[v] != b:
                        return None
                else:
                    f[v] = b
                    queue.append(v)
        return f


def dual_discriminator_solve(x: Instance, s: Structure) -> Assignment | None:
    """Solve x over a template preserved by the dual discriminator.

    Returns:
        A solution, or None if x is unsolvable.

    Raises:
        SignatureMismatchError: If signatures differ.
        PreconditionError: If the dual discriminator does not preserve s.
        DecompositionError: If a relation does not decompose.
        VerificationError: If the glued assignment is not a solution.
    """
    require_same_signature(x, s)
    atoms = instance_atoms(x, decompose_template(s))
    rules = _Rules.compile(x.variable_count, s.domain_size, atoms)
    values: list[int | None] = [None] * x.variable_count
    closures = 0
    for v in x.variables:
        if values[v] is not None:
            continue
        for a in sorted(rules.allowed[v]):
            f = rules.closure(v, a)
            if f is not None:
                break
        else:
            logger.info("variable %d has no consistent closure: unsolvable", v)
            return None
        closures += 1
        for u, b in f.items():
            if values[u] is None:
                values[u] = b
    logger.debug("%d closures over %d atoms", closures, len(atoms))
    solution = Assignment(tuple(v for v in values if v is not None))
    if not is_homomorphism(solution, x, s):
        raise VerificationError("glued closures do not form a solution")
    return solution
