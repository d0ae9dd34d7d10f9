"""Acyclic obstructions built from a cycle-inconsistent closed path.

Given an arc-consistent instance and a closed path x_1 ... x_n x_1 along
which some value of U_{x_1} cannot return to itself, the instance gets the
unary constraint UP(x_1), where UP holds the values that do return. The
refinement tree for that extended instance is unsolvable; each UP(y) in it
is then replaced by a copy of the path hanging off y, ending in a fresh copy
of x_1. The result is a solvable tree with no solution constant on the
fiber over x_1.
"""

import logging

from cspalgebra.domain.models import (
    ClosedPath,
    CycleObstruction,
    Instance,
    Lift,
    Row,
    Signature,
    Structure,
    values_of,
)
from cspalgebra.engine.consistency.acyclic import is_acyclic
from cspalgebra.engine.consistency.arc import good_witness
from cspalgebra.engine.consistency.cycles import returning_values
from cspalgebra.engine.core.homomorphism import find_homomorphism, project_solutions
from cspalgebra.engine.exceptions import PreconditionError, VerificationError
from cspalgebra.engine.obstruction.lifts import verify_lift
from cspalgebra.engine.obstruction.refinement import refine

logger = logging.getLogger(__name__)

PATH_NAME = "UP"
REJECTED = "path does not witness cycle-inconsistency"


def ac_name(mask: int) -> str:
    return f"AC{mask}"


def _on_instance(p: ClosedPath, x: Instance) -> bool:
    return all(
        0 <= step.relation < len(x.tables) and step.row in x.tables[step.relation]
        for step in p.steps
    )


class _Builder:
    """Accumulates the variables and constraints of the obstruction."""

    def __init__(self, signature: Signature, lift_map: list[int], tables: list[set[Row]]) -> None:
        self.signature = signature
        self.lift_map = lift_map
        self.tables = tables

    def fresh(self, image: int) -> int:
        self.lift_map.append(image)
        return len(self.lift_map) - 1

    def add(self, relation: int, row: Row) -> None:
        self.tables[relation].add(row)

    def instance(self) -> Instance:
        return Instance(
            len(self.lift_map), self.signature, tuple(frozenset(t) for t in self.tables)
        )


def cycle_obstruction_lift(
    x: Instance,
    s: Structure,
    p: ClosedPath,
    *,
    node_cap: int | None = None,
) -> CycleObstruction:
    """Solvable acyclic lift of x with no solution constant over p's first variable.

    The template is s plus one unary relation per non-trivial arc-consistent
    value set (named AC<mask>) and the returning values (named UP); the
    lift targets x plus those AC constraints.

    Raises:
        PreconditionError: If x is not arc-consistent, p is empty or not a
            path of x, or every value of U_{x_1} returns along p.
        VerificationError: If the built lift fails its checks.
    """
    if len(p) == 0 or not _on_instance(p, x):
        raise PreconditionError(REJECTED)
    witness = good_witness(x, s)
    if witness is None:
        raise PreconditionError(REJECTED)
    returning = returning_values(p, s, witness)
    if returning == frozenset(witness.allowed(p.start)):
        raise PreconditionError(REJECTED)

    full = witness.full_mask
    masks = sorted({witness.allowed_mask(v) for v in x.variables} - {full})
    derived = {ac_name(m): [(a,) for a in values_of(m)] for m in masks}
    derived[PATH_NAME] = [(a,) for a in sorted(returning)]
    clashes = set(derived) & set(s.signature.names)
    if clashes:
        raise PreconditionError(f"derived relation names already in use: {sorted(clashes)}")
    template = s.with_relations(derived, {name: 1 for name in derived})
    ac_index = {m: len(s.tables) + i for i, m in enumerate(masks)}
    up_index = len(template.tables) - 1

    ac_tables = [
        frozenset((v,) for v in x.variables if witness.allowed_mask(v) == m) for m in masks
    ]
    target = Instance(
        x.variable_count, template.signature, x.tables + tuple(ac_tables) + (frozenset(),)
    )
    marked = Instance(
        x.variable_count,
        template.signature,
        x.tables + tuple(ac_tables) + (frozenset({(p.start,)}),),
    )
    refinement = refine(marked, template, node_cap=node_cap)
    tree = refinement.lift
    if tree is None:
        raise PreconditionError(REJECTED)

    builder = _Builder(
        template.signature,
        list(tree.lift_map),
        [set(t) for t in tree.instance.tables[:up_index]] + [set()],
    )

    def restrict(variable: int, image: int) -> None:
        mask = witness.allowed_mask(image)
        if mask != full:
            builder.add(ac_index[mask], (variable,))

    for (y,) in sorted(tree.instance.tables[up_index]):
        restrict(y, p.start)
        current = y
        for i, step in enumerate(p.steps):
            nxt = builder.fresh(p.variables[i + 1])
            if i + 1 < len(p.steps):
                restrict(nxt, p.variables[i + 1])
            row = [
                current if q == step.j else nxt if q == step.k else builder.fresh(v)
                for q, v in enumerate(step.row)
            ]
            builder.add(step.relation, tuple(row))
            current = nxt

    lift = Lift(builder.instance(), tuple(builder.lift_map), acyclic=True)
    fiber = lift.fiber(p.start)
    obstruction = CycleObstruction(lift, target, template, p.start, fiber, tuple(derived))
    _verify(obstruction)
    logger.debug(
        "cycle obstruction: %d variables, fiber of %d", lift.instance.variable_count, len(fiber)
    )
    return obstruction


def _verify(obstruction: CycleObstruction) -> None:
    y = obstruction.lift.instance
    template = obstruction.template
    if not verify_lift(obstruction.lift, obstruction.target) or not is_acyclic(y):
        raise VerificationError("cycle obstruction is not an acyclic lift")
    if find_homomorphism(y, template) is None:
        raise VerificationError("cycle obstruction has no solution")
    for a in template.elements:
        seed = {v: a for v in obstruction.fiber}
        if find_homomorphism(y, template, seed) is not None:
            raise VerificationError(f"cycle obstruction has a solution constant {a} on the fiber")


def fiber_relation(obstruction: CycleObstruction) -> set[tuple[int, ...]]:
    """Value tuples on the fiber that extend to a solution of the lift."""
    return project_solutions(
        obstruction.lift.instance, obstruction.template, obstruction.fiber
    )
