"""Domain models."""

from cspalgebra.domain.models.consistency import (
    ClosedPath,
    CycleAudit,
    PathStep,
    Witness,
    mask_of,
    values_of,
)
from cspalgebra.domain.models.formula import (
    Atom,
    ReductionCertificate,
    SimpleFormula,
    SimpleInterpretation,
    VariableOrigin,
)
from cspalgebra.domain.models.gadget import (
    COLORS,
    BoundaryPredicate,
    CNFInstance,
    EdgeColoring,
    Gadget,
    GadgetPart,
    Graph,
    Literal,
    TablePredicate,
    canonical_pattern,
)
from cspalgebra.domain.models.lift import CycleObstruction, Lift
from cspalgebra.domain.models.operation import (
    Certificate,
    FlatTerm,
    IdentitySystem,
    Operation,
    PolymorphismWitness,
)
from cspalgebra.domain.models.structure import (
    Assignment,
    Instance,
    PartialAssignment,
    RelationSymbol,
    Row,
    Signature,
    Structure,
    Table,
)
from cspalgebra.domain.models.verdict import (
    BooleanBucket,
    BooleanVerdict,
    CheckResult,
    DigraphVerdict,
    Evidence,
    GraphVerdict,
    Status,
    Verdict,
)

__all__ = [
    "Assignment",
    "Atom",
    "BooleanBucket",
    "BooleanVerdict",
    "BoundaryPredicate",
    "CNFInstance",
    "COLORS",
    "Certificate",
    "CheckResult",
    "ClosedPath",
    "CycleAudit",
    "CycleObstruction",
    "DigraphVerdict",
    "EdgeColoring",
    "Evidence",
    "FlatTerm",
    "Gadget",
    "GadgetPart",
    "Graph",
    "GraphVerdict",
    "IdentitySystem",
    "Instance",
    "Lift",
    "Literal",
    "Operation",
    "PartialAssignment",
    "PathStep",
    "PolymorphismWitness",
    "ReductionCertificate",
    "RelationSymbol",
    "Row",
    "Signature",
    "SimpleFormula",
    "SimpleInterpretation",
    "Status",
    "Structure",
    "Table",
    "TablePredicate",
    "VariableOrigin",
    "Verdict",
    "Witness",
    "canonical_pattern",
    "mask_of",
    "values_of",
]
