"""Binary decomposition of relations preserved by the dual discriminator.

Such a relation is the conjunction of its unary and binary projections,
and every binary projection is a product A x B, possibly cut down by a
bijection from A to B or by a disjunction x = a or y = b.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations, product

from cspalgebra.domain.models import Instance, Structure
from cspalgebra.engine.exceptions import CapExceededError, DecompositionError, PreconditionError
from cspalgebra.engine.polymorphism import check_dual_discriminator
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnaryAtom:
    position: int
    allowed: frozenset[int]

    def holds(self, t: tuple[int, ...]) -> bool:
        return t[self.position] in self.allowed


@dataclass(frozen=True)
class DisjunctionAtom:
    """x_i = a or x_j = b."""

    i: int
    j: int
    a: int
    b: int

    def holds(self, t: tuple[int, ...]) -> bool:
        return t[self.i] == self.a or t[self.j] == self.b


@dataclass(frozen=True)
class PermutationAtom:
    """x_j = permutation[x_i]."""

    i: int
    j: int
    permutation: tuple[int, ...]

    def holds(self, t: tuple[int, ...]) -> bool:
        return t[self.j] == self.permutation[t[self.i]]

    def inverse(self) -> tuple[int, ...]:
        out = [0] * len(self.permutation)
        for a, b in enumerate(self.permutation):
            out[b] = a
        return tuple(out)


Atom = UnaryAtom | DisjunctionAtom | PermutationAtom


def _extend_bijection(pairs: dict[int, int], domain_size: int) -> tuple[int, ...]:
    """A permutation of the domain agreeing with a partial bijection."""
    spare = iter(sorted(set(range(domain_size)) - set(pairs.values())))
    return tuple(pairs[a] if a in pairs else next(spare) for a in range(domain_size))


def _binary_atom(
    i: int, j: int, pairs: set[tuple[int, int]], left: set[int], right: set[int], domain_size: int
) -> Atom | None:
    if len(pairs) == len(left) * len(right):
        return None
    forward: dict[int, set[int]] = {}
    backward: dict[int, set[int]] = {}
    for a, b in pairs:
        forward.setdefault(a, set()).add(b)
        backward.setdefault(b, set()).add(a)
    if all(len(v) == 1 for v in forward.values()) and all(len(v) == 1 for v in backward.values()):
        return PermutationAtom(
            i, j, _extend_bijection({a: next(iter(v)) for a, v in forward.items()}, domain_size)
        )
    for a, b in product(sorted(left), sorted(right)):
        if pairs == {(x, y) for x in left for y in right if x == a or y == b}:
            return DisjunctionAtom(i, j, a, b)
    raise DecompositionError(f"Projection on ({i},{j}) is not of a dual-discriminator form")


def decompose_relation(table: Iterable[tuple[int, ...]], arity: int, domain_size: int) -> tuple[Atom, ...]:
    """Unary and binary atoms whose conjunction is exactly the relation.

    Raises:
        DecompositionError: If no such conjunction exists.
        CapExceededError: If checking the conjunction needs more than
            settings.power_cap candidate tuples.
    """
    rows = set(table)
    if not rows:
        return (UnaryAtom(0, frozenset()),)
    columns = [{t[i] for t in rows} for i in range(arity)]
    atoms: list[Atom] = [
        UnaryAtom(i, frozenset(col)) for i, col in enumerate(columns) if len(col) < domain_size
    ]
    for i, j in combinations(range(arity), 2):
        atom = _binary_atom(i, j, {(t[i], t[j]) for t in rows}, columns[i], columns[j], domain_size)
        if atom is not None:
            atoms.append(atom)

    candidates = 1
    for col in columns:
        candidates *= len(col)
    if candidates > settings.power_cap:
        raise CapExceededError("decomposition check (candidate tuples)", candidates, settings.power_cap)
    generated = {t for t in product(*map(sorted, columns)) if all(a.holds(t) for a in atoms)}
    if generated != rows:
        raise DecompositionError(
            f"Relation is not the conjunction of its binary projections ({len(generated)} vs {len(rows)} tuples)"
        )
    return tuple(atoms)


def decompose_template(s: Structure) -> dict[str, tuple[Atom, ...]]:
    """Atoms of every relation of a template with a dual discriminator polymorphism.

    Raises:
        PreconditionError: If the dual discriminator does not preserve s.
    """
    if not check_dual_discriminator(s):
        raise PreconditionError("template is not preserved by the dual discriminator")
    out = {
        symbol.name: decompose_relation(table, symbol.arity, s.domain_size)
        for symbol, table in s.items()
    }
    logger.debug("decomposed %d relations into %d atoms", len(out), sum(map(len, out.values())))
    return out


def instance_atoms(x: Instance, atoms: dict[str, tuple[Atom, ...]]) -> list[Atom]:
    """The template atoms instantiated on every constraint, positions read as variables."""
    out: list[Atom] = []
    for symbol, table in x.items():
        for row in sorted(table):
            for atom in atoms[symbol.name]:
                out.append(_instantiate(atom, row))
    return out


def _instantiate(atom: Atom, row: tuple[int, ...]) -> Atom:
    match atom:
        case UnaryAtom(position, allowed):
            return UnaryAtom(row[position], allowed)
        case DisjunctionAtom(i, j, a, b):
            return DisjunctionAtom(row[i], row[j], a, b)
        case PermutationAtom(i, j, permutation):
            return PermutationAtom(row[i], row[j], permutation)
