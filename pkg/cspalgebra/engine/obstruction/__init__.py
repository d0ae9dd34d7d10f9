"""Acyclic obstructions: refinement trees, cycle gadgets and lift checks."""

from cspalgebra.engine.obstruction.cycle import (
    PATH_NAME,
    ac_name,
    cycle_obstruction_lift,
    fiber_relation,
)
from cspalgebra.engine.obstruction.lifts import identity_lift, verify_lift
from cspalgebra.engine.obstruction.refinement import (
    ArcRefinement,
    RefinementStep,
    refine,
    unsolvable_acyclic_lift,
)

__all__ = [
    "PATH_NAME",
    "ArcRefinement",
    "RefinementStep",
    "ac_name",
    "cycle_obstruction_lift",
    "fiber_relation",
    "identity_lift",
    "refine",
    "unsolvable_acyclic_lift",
    "verify_lift",
]
