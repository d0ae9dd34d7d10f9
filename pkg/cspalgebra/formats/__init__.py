"""Text, DIMACS, edge-list and JSON formats."""

from cspalgebra.formats.chain import ChainDocument, load_chain
from cspalgebra.formats.dimacs import emit_dimacs, parse_dimacs
from cspalgebra.formats.edges import emit_edge_list, parse_edge_list
from cspalgebra.formats.exceptions import FormatError, ParseError, ReportError
from cspalgebra.formats.report import (
    CodingModel,
    GadgetModel,
    ObstructionModel,
    ReductionModel,
    ReportDocument,
    SolutionModel,
    StructureModel,
    VerdictModel,
    WitnessModel,
    dump_report,
    load_report,
    verify_report,
    verify_witness,
)
from cspalgebra.formats.text import (
    emit_assignment,
    emit_instance,
    emit_lift,
    emit_template,
    parse_document,
    parse_instance,
    parse_lift,
    parse_template,
    template_labels,
)

__all__ = [
    "ChainDocument",
    "CodingModel",
    "FormatError",
    "GadgetModel",
    "ObstructionModel",
    "ParseError",
    "ReductionModel",
    "ReportDocument",
    "ReportError",
    "SolutionModel",
    "StructureModel",
    "VerdictModel",
    "WitnessModel",
    "dump_report",
    "emit_assignment",
    "emit_dimacs",
    "emit_edge_list",
    "emit_instance",
    "emit_lift",
    "emit_template",
    "load_chain",
    "load_report",
    "parse_dimacs",
    "parse_document",
    "parse_edge_list",
    "parse_instance",
    "parse_lift",
    "parse_template",
    "template_labels",
    "verify_report",
    "verify_witness",
]
