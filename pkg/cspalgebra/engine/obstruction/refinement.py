"""Tree-shaped obstructions for instances that are not arc-consistent.

Every variable x carries a value set U_x and a tree instance Y_x whose
solutions send the root to exactly U_x. Initially U_x = D and Y_x is a
single unconstrained variable. A bad triple (x, constraint, position) is one
where the position's support inside the product of the current sets is
strictly smaller than U_x; refining it replaces U_x by that support and Y_x
by the disjoint union of the trees of the constraint's variables joined by
one copy of the constraint. Triples are always taken least first in the
order (variable, relation index, tuple rank, position).
"""

import logging
from dataclasses import dataclass, field

from cspalgebra.domain.models import Instance, Lift, Row, Structure, values_of
from cspalgebra.engine.consistency.acyclic import acyclic_solve, is_acyclic
from cspalgebra.engine.consistency.arc import supported_masks
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.exceptions import CapExceededError, VerificationError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class _Tree:
    """Unmaterialized Y_x: a bare variable or one tuple over child trees."""

    variable: int
    size: int
    relation: int | None = None
    row: Row | None = None
    position: int = 0
    children: tuple["_Tree", ...] = ()


@dataclass(frozen=True)
class RefinementStep:
    """One refinement: the triple used and the value set it left."""

    variable: int
    relation: int
    row: Row
    position: int
    allowed: int

    @property
    def values(self) -> tuple[int, ...]:
        return values_of(self.allowed)


def _materialize(tree: _Tree, x: Instance) -> tuple[Lift, int]:
    """Copy a tree into a fresh instance; returns the lift and its root."""
    lift_map: list[int] = []
    tables: list[set[Row]] = [set() for _ in x.tables]
    roots: list[int] = []
    stack: list[tuple[_Tree, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if node.relation is None:
            roots.append(len(lift_map))
            lift_map.append(node.variable)
        elif not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(node.children))
        else:
            arity = len(node.children)
            row = tuple(roots[-arity:])
            del roots[-arity:]
            tables[node.relation].add(row)
            roots.append(row[node.position])
    instance = Instance(len(lift_map), x.signature, tuple(frozenset(t) for t in tables))
    return Lift(instance, tuple(lift_map), acyclic=True), roots[0]


@dataclass
class ArcRefinement:
    """Outcome of the refinement schedule on an instance."""

    instance: Instance
    template: Structure
    steps: list[RefinementStep]
    allowed: list[int]
    _trees: list[_Tree] = field(repr=False)

    @property
    def failed(self) -> bool:
        return any(mask == 0 for mask in self.allowed)

    def root_lift(self, variable: int) -> tuple[Lift, int]:
        """Current tree for a variable as a lift, with its root."""
        return _materialize(self._trees[variable], self.instance)

    @property
    def lift(self) -> Lift | None:
        """Tree of the variable emptied last, or None if every set survived."""
        if not self.failed:
            return None
        return self.root_lift(self.steps[-1].variable)[0]


def _triples(x: Instance) -> list[tuple[int, int, Row, int]]:
    ranked = []
    for index in range(len(x.tables)):
        for rank, row in enumerate(x.sorted_rows(index)):
            for position, v in enumerate(row):
                ranked.append((v, index, rank, position, row))
    ranked.sort()
    return [(v, index, row, position) for v, index, _, position, row in ranked]


def refine(
    x: Instance,
    s: Structure,
    *,
    max_steps: int | None = None,
    node_cap: int | None = None,
) -> ArcRefinement:
    """Run the refinement schedule until a set empties or no triple is bad.

    Args:
        x: Instance.
        s: Template.
        max_steps: Stop after this many refinements.
        node_cap: Most variables in a tree. Defaults to settings.lift_node_cap.

    Raises:
        CapExceededError: If a tree grows past the node cap.
    """
    require_same_signature(x, s)
    cap = settings.lift_node_cap if node_cap is None else node_cap
    full = (1 << s.domain_size) - 1
    allowed = [full] * x.variable_count
    trees = [_Tree(v, 1) for v in x.variables]
    templates = [s.sorted_rows(i) for i in range(len(s.tables))]
    triples = _triples(x)
    steps: list[RefinementStep] = []

    while max_steps is None or len(steps) < max_steps:
        for v, index, row, position in triples:
            support = supported_masks(templates[index], [allowed[u] for u in row])[position]
            if support != allowed[v]:
                break
        else:
            break
        children = tuple(trees[u] for u in row)
        size = sum(child.size for child in children)
        if size > cap:
            raise CapExceededError(
                f"acyclic lift variables after {len(steps)} refinements", size, cap
            )
        trees[v] = _Tree(v, size, index, row, position, children)
        allowed[v] = support
        steps.append(RefinementStep(v, index, row, position, support))
        if support == 0:
            break
    logger.debug("refinement: %d steps", len(steps))
    return ArcRefinement(x, s, steps, allowed, trees)


def unsolvable_acyclic_lift(
    x: Instance, s: Structure, *, node_cap: int | None = None
) -> Lift | None:
    """An acyclic lift of x with no solution, or None if x is arc-consistent.

    Raises:
        CapExceededError: If the lift grows past the node cap.
        VerificationError: If the produced lift is cyclic or solvable.
    """
    lift = refine(x, s, node_cap=node_cap).lift
    if lift is None:
        return None
    if not is_acyclic(lift.instance) or acyclic_solve(lift.instance, s) is not None:
        raise VerificationError("refinement lift is not an unsolvable tree")
    return lift
