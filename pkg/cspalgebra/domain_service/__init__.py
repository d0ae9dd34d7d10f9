"""Domain service layer: template classification and the solver front-end."""

from cspalgebra.domain_service.classify import (
    classify_boolean,
    classify_graph,
    classify_many,
    classify_smooth_digraph,
    classify_template,
    is_width1,
    siggers_on_core,
)
from cspalgebra.domain_service.solve import (
    DualDiscriminatorStrategy,
    RockPaperScissorsStrategy,
    SearchStrategy,
    SolveOutcome,
    SolverService,
    Width1Strategy,
    select_strategies,
    solve,
)

__all__ = [
    "DualDiscriminatorStrategy",
    "RockPaperScissorsStrategy",
    "SearchStrategy",
    "SolveOutcome",
    "SolverService",
    "Width1Strategy",
    "classify_boolean",
    "classify_graph",
    "classify_many",
    "classify_smooth_digraph",
    "classify_template",
    "is_width1",
    "select_strategies",
    "siggers_on_core",
    "solve",
]
