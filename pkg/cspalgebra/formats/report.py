"""JSON report documents.

Every witness is stored with the operation tables as nested arrays and
the structure it was certified against, so verify_report can re-check it
without the library state that produced it.
"""

import logging
import re
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from cspalgebra.domain.exceptions import DomainError
from cspalgebra.domain.models import (
    Assignment,
    BooleanVerdict,
    CheckResult,
    Evidence,
    Gadget,
    IdentitySystem,
    Instance,
    Operation,
    PolymorphismWitness,
    ReductionCertificate,
    Signature,
    Structure,
    Verdict,
)
from cspalgebra.engine.core import is_homomorphism
from cspalgebra.engine.exceptions import EngineError
from cspalgebra.engine.gadgets import CodingRecord, GadgetVerdict
from cspalgebra.engine.polymorphism import certify, identities
from cspalgebra.formats.exceptions import ReportError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
IDENTITY_NAME = re.compile(r"siggers|(wnu|cyclic|none)\((\d+)\)")


class RelationModel(BaseModel):
    name: str
    arity: int
    tuples: list[list[int]]


class StructureModel(BaseModel):
    """A structure (size = domain size) or an instance (size = variable count)."""

    size: int
    relations: list[RelationModel]

    @classmethod
    def of(cls, obj: Structure | Instance) -> "StructureModel":
        size = obj.domain_size if isinstance(obj, Structure) else obj.variable_count
        return cls(
            size=size,
            relations=[
                RelationModel(name=symbol.name, arity=symbol.arity, tuples=[list(r) for r in obj.sorted_rows(i)])
                for i, symbol in enumerate(obj.signature)
            ],
        )

    def signature(self) -> Signature:
        return Signature.of(*((r.name, r.arity) for r in self.relations))

    def to_structure(self) -> Structure:
        return Structure.from_signature(self.size, self.signature(), {r.name: r.tuples for r in self.relations})

    def to_instance(self) -> Instance:
        return Instance.create(self.size, self.signature(), {r.name: r.tuples for r in self.relations})


class OperationModel(BaseModel):
    symbol: str
    arity: int
    table: Any = Field(description="nested arrays indexed by the arguments in order")


class WitnessModel(BaseModel):
    identities: str
    operations: list[OperationModel]
    equations_checked: int
    relations_checked: list[str]
    notes: list[str] = []
    structure: StructureModel

    @classmethod
    def of(cls, witness: PolymorphismWitness, s: Structure) -> "WitnessModel":
        return cls(
            identities=witness.certificate.identities,
            operations=[
                OperationModel(symbol=name, arity=op.arity, table=op.as_nested())
                for name, op in witness.operations.items()
            ],
            equations_checked=witness.certificate.equations_checked,
            relations_checked=list(witness.certificate.relations_checked),
            notes=list(witness.certificate.notes),
            structure=StructureModel.of(s),
        )


def _witness(witness: PolymorphismWitness | None, s: Structure | None) -> WitnessModel | None:
    if witness is None or s is None:
        return None
    return WitnessModel.of(witness, s)


class CheckModel(BaseModel):
    status: Literal["yes", "no", "unknown"]
    note: str = ""
    arity: int | None = None
    witness: WitnessModel | None = None

    @classmethod
    def of(cls, check: CheckResult) -> "CheckModel":
        return cls(
            status=check.status.value,
            note=check.note,
            arity=check.arity,
            witness=_witness(check.witness, check.structure),
        )


class BooleanModel(BaseModel):
    bucket: str
    number: int | None = None
    operation: str | None = None
    witness: WitnessModel | None = None

    @classmethod
    def of(cls, verdict: BooleanVerdict, s: Structure) -> "BooleanModel":
        return cls(
            bucket=verdict.bucket.value,
            number=verdict.bucket.number,
            operation=verdict.operation,
            witness=_witness(verdict.witness, s),
        )


class GraphModel(BaseModel):
    bipartite: bool
    core_size: int
    tractable: bool
    siggers_agrees: bool


class DigraphModel(BaseModel):
    core_size: int
    core_is_cycle_union: bool
    tractable: bool
    siggers_agrees: bool


class EvidenceModel(BaseModel):
    kind: str
    description: str
    witness: WitnessModel | None = None

    @classmethod
    def of(cls, evidence: Evidence) -> "EvidenceModel":
        return cls(
            kind=evidence.kind,
            description=evidence.description,
            witness=_witness(evidence.witness, evidence.structure),
        )


class VerdictModel(BaseModel):
    template_id: str
    tags: list[str] = []
    tractable: CheckModel
    width1: CheckModel
    dual_discriminator: CheckModel
    boolean: BooleanModel
    graph: GraphModel | None = None
    smooth_digraph: DigraphModel | None = None
    labels: list[str] = []
    evidence: list[EvidenceModel] = []

    @classmethod
    def of(cls, verdict: Verdict, s: Structure, tags: tuple[str, ...] = ()) -> "VerdictModel":
        return cls(
            template_id=verdict.template_id,
            tags=list(tags),
            tractable=CheckModel.of(verdict.tractable),
            width1=CheckModel.of(verdict.width1),
            dual_discriminator=CheckModel.of(verdict.dual_discriminator),
            boolean=BooleanModel.of(verdict.boolean, s),
            graph=GraphModel(**vars(verdict.graph)) if verdict.graph else None,
            smooth_digraph=DigraphModel(**vars(verdict.smooth_digraph)) if verdict.smooth_digraph else None,
            labels=list(verdict.labels),
            evidence=[EvidenceModel.of(e) for e in verdict.evidence],
        )


class SolutionModel(BaseModel):
    template_id: str
    strategy: str
    attempted: list[str]
    solved: bool
    assignment: list[int] | None = None
    template: StructureModel
    instance: StructureModel


class GadgetModel(BaseModel):
    gadget: str
    passed: bool
    checked: int
    up_to_permutation: bool
    counterexample: list[int] | None = None
    extendable: bool | None = None
    failed_part: str | None = None
    vertices: int
    edges: int
    coding_edges: int

    @classmethod
    def of(cls, verdict: GadgetVerdict, g: Gadget) -> "GadgetModel":
        return cls(
            gadget=verdict.gadget,
            passed=verdict.passed,
            checked=verdict.checked,
            up_to_permutation=verdict.up_to_permutation,
            counterexample=list(verdict.counterexample) if verdict.counterexample is not None else None,
            extendable=verdict.extendable,
            failed_part=verdict.failed_part,
            vertices=g.graph.vertex_count,
            edges=g.graph.edge_count,
            coding_edges=len(g.coding_edges),
        )


class CodingModel(BaseModel):
    """A 3-SAT formula wired into a cubic graph, with its colouring if requested."""

    variables: int
    clauses: int
    vertices: int
    edges: int
    setters: dict[int, int]
    gates: list[int]
    inverters: int
    pendant_count: int
    colorable: bool | None = None
    assignment: list[int] | None = None

    @classmethod
    def of(cls, record: CodingRecord) -> "CodingModel":
        return cls(
            variables=record.formula.variable_count,
            clauses=len(record.formula.clauses),
            vertices=record.graph.vertex_count,
            edges=record.graph.edge_count,
            setters=dict(record.setters),
            gates=list(record.gates),
            inverters=len(record.inverters),
            pendant_count=record.pendant_count,
        )


class ReductionModel(BaseModel):
    kind: str
    source_variables: int
    output_variables: int
    degree_multiplier: int
    max_input_degree: int
    max_output_degree: int
    degree_bound_holds: bool
    notes: list[str] = []
    steps: list["ReductionModel"] = []

    @classmethod
    def of(cls, c: ReductionCertificate) -> "ReductionModel":
        return cls(
            kind=c.kind,
            source_variables=c.source_variable_count,
            output_variables=c.output_variable_count,
            degree_multiplier=c.degree_multiplier,
            max_input_degree=c.max_input_degree,
            max_output_degree=c.max_output_degree,
            degree_bound_holds=c.degree_bound_holds,
            notes=list(c.notes),
            steps=[cls.of(step) for step in c.steps],
        )


class ObstructionModel(BaseModel):
    kind: Literal["unsolvable-acyclic-lift", "cycle-obstruction", "arc-consistent"]
    lift_variables: int = 0
    lift_map: list[int] = []
    distinguished: int | None = None
    fiber: list[int] = []
    derived_relations: list[str] = []
    note: str = ""


class ReportDocument(BaseModel):
    """Top-level report; only the sections a command produces are filled."""

    schema_version: int = SCHEMA_VERSION
    command: str
    verdicts: list[VerdictModel] = []
    solutions: list[SolutionModel] = []
    gadgets: list[GadgetModel] = []
    codings: list[CodingModel] = []
    reductions: list[ReductionModel] = []
    obstructions: list[ObstructionModel] = []


def dump_report(doc: ReportDocument, indent: int | None = 2) -> str:
    return doc.model_dump_json(indent=indent, exclude_none=True) + "\n"


def load_report(text: str) -> ReportDocument:
    """Parse and validate a report.

    Raises:
        ReportError: If the text is not a schema-valid report.
    """
    try:
        doc = ReportDocument.model_validate_json(text)
    except ValidationError as e:
        raise ReportError(f"report does not match the schema: {e}") from e
    if doc.schema_version != SCHEMA_VERSION:
        raise ReportError(f"unsupported schema version {doc.schema_version}")
    return doc


def identity_system(name: str, symbol: str) -> IdentitySystem:
    """Rebuild a standard identity system from its report name.

    Raises:
        ReportError: If the name is not one of the standard systems.
    """
    match = IDENTITY_NAME.fullmatch(name)
    if match is None:
        raise ReportError(f"unknown identity system '{name}'")
    kind, n = match.group(1), match.group(2)
    if kind is None:
        return identities.siggers()
    if kind == "wnu":
        return identities.wnu(int(n))
    if kind == "cyclic":
        return identities.cyclic(int(n))
    return identities.empty(int(n), symbol)


def verify_witness(model: WitnessModel) -> None:
    """Re-check the identities and every relation of one stored witness.

    Raises:
        ReportError: If the witness cannot be rebuilt or fails a check.
    """
    try:
        s = model.structure.to_structure()
        ops = {
            op.symbol: Operation.from_nested(s.domain_size, op.arity, op.table) for op in model.operations
        }
        ids = identity_system(model.identities, model.operations[0].symbol)
        certify(ops, ids, s)
    except (DomainError, EngineError, ValueError) as e:
        raise ReportError(f"{model.identities} witness fails: {e}") from e


def _witnesses(doc: ReportDocument) -> list[tuple[str, WitnessModel]]:
    out = []
    for v in doc.verdicts:
        checks = {
            "tractable": v.tractable.witness,
            "width1": v.width1.witness,
            "dual_discriminator": v.dual_discriminator.witness,
            "boolean": v.boolean.witness,
        }
        checks |= {f"evidence {e.kind}": e.witness for e in v.evidence}
        out += [(f"{v.template_id}: {where}", w) for where, w in checks.items() if w is not None]
    return out


def verify_report(doc: ReportDocument) -> list[str]:
    """Problems found when re-checking every witness and solution; empty if all pass."""
    problems = []
    checked = 0
    for where, witness in _witnesses(doc):
        checked += 1
        try:
            verify_witness(witness)
        except ReportError as e:
            problems.append(f"{where}: {e}")
    for solution in doc.solutions:
        if solution.assignment is None:
            continue
        checked += 1
        try:
            ok = is_homomorphism(
                Assignment(tuple(solution.assignment)),
                solution.instance.to_instance(),
                solution.template.to_structure(),
            )
        except (DomainError, EngineError, ValueError) as e:
            problems.append(f"{solution.template_id}: solution cannot be checked: {e}")
            continue
        if not ok:
            problems.append(f"{solution.template_id}: assignment is not a solution")
    logger.info("verified %d items, %d problems", checked, len(problems))
    return problems
