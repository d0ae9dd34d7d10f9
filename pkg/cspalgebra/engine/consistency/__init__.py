"""Arc consistency, width-1 solving, acyclic instances and cycle audits."""

from cspalgebra.engine.consistency.acyclic import acyclic_solve, incidence_graph, is_acyclic
from cspalgebra.engine.consistency.arc import ac_closure, good_witness, is_arc_consistent
from cspalgebra.engine.consistency.cycles import (
    cycle_consistency_audit,
    iter_closed_paths,
    path_matrix,
    returning_values,
)
from cspalgebra.engine.consistency.width1 import required_arity, validate_extractor, width1_solve

__all__ = [
    "ac_closure",
    "acyclic_solve",
    "cycle_consistency_audit",
    "good_witness",
    "incidence_graph",
    "is_acyclic",
    "is_arc_consistent",
    "iter_closed_paths",
    "path_matrix",
    "required_arity",
    "returning_values",
    "validate_extractor",
    "width1_solve",
]
