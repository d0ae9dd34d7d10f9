"""Lift verification and plumbing."""

from cspalgebra.domain.models import Instance, Lift
from cspalgebra.engine.consistency.acyclic import is_acyclic


def identity_lift(x: Instance) -> Lift:
    return Lift(x, tuple(x.variables), acyclic=is_acyclic(x))


def verify_lift(lift: Lift, x: Instance) -> bool:
    """True iff the lift map is a homomorphism onto x and acyclicity holds when claimed."""
    y = lift.instance
    if y.signature != x.signature or len(lift.lift_map) != y.variable_count:
        return False
    if any(not 0 <= v < x.variable_count for v in lift.lift_map):
        return False
    for source, target in zip(y.tables, x.tables, strict=True):
        for row in source:
            if tuple(lift.lift_map[v] for v in row) not in target:
                return False
    return not lift.acyclic or is_acyclic(y)
