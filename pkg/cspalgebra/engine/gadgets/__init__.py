"""Edge-colouring gadgets and the 3SAT reduction built from them."""

from cspalgebra.engine.gadgets.assembly import Assembly, Placement
from cspalgebra.engine.gadgets.coloring import (
    COLORING_TEMPLATE,
    brute_force_edge_coloring,
    coloring_instance,
    find_edge_coloring,
    sat_edge_coloring,
)
from cspalgebra.engine.gadgets.library import inverter, or_gate, ring, variable_setter
from cspalgebra.engine.gadgets.predicates import (
    AllOrNothing,
    InverterPredicate,
    RingPredicate,
    SomePairAgrees,
    third,
)
from cspalgebra.engine.gadgets.sat_reduction import (
    CodingRecord,
    assignment_to_coloring,
    coloring_to_assignment,
    reduce_3sat,
)
from cspalgebra.engine.gadgets.verify import (
    GadgetVerdict,
    certify,
    check_assembly,
    extend_boundary,
    verify_gadget,
)

__all__ = [
    "COLORING_TEMPLATE",
    "AllOrNothing",
    "Assembly",
    "CodingRecord",
    "GadgetVerdict",
    "InverterPredicate",
    "Placement",
    "RingPredicate",
    "SomePairAgrees",
    "assignment_to_coloring",
    "brute_force_edge_coloring",
    "certify",
    "check_assembly",
    "coloring_instance",
    "coloring_to_assignment",
    "extend_boundary",
    "find_edge_coloring",
    "inverter",
    "or_gate",
    "reduce_3sat",
    "ring",
    "sat_edge_coloring",
    "third",
    "variable_setter",
    "verify_gadget",
]
