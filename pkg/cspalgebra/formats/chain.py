"""JSON documents describing construction chains for `reduce`.

    {
      "template": "nae",
      "steps": [
        {"kind": "interpret",
         "relations": [{"name": "E", "arity": 2,
                        "formula": {"free": ["x", "y"], "atoms": [["NAE", ["x", "x", "y"]]]}}]},
        {"kind": "singleton"}
      ]
    }

An interpret step defaults to dimension 1, the full power as its domain and
a quotient numbering the domain tuples in lexicographic order.
"""

from collections.abc import Callable
from typing import Annotated, Literal

from pydantic import BaseModel, Field, ValidationError

from cspalgebra.domain.exceptions import DomainError
from cspalgebra.domain.models import Atom, Signature, SimpleFormula, SimpleInterpretation, Structure
from cspalgebra.engine.construction import (
    CompiledFormula,
    ConstructionChain,
    EquivalenceStep,
    InterpretStep,
    SingletonStep,
    Step,
)
from cspalgebra.formats.exceptions import FormatError
from cspalgebra.formats.report import StructureModel


class FormulaModel(BaseModel):
    free: list[str]
    bound: list[str] = []
    atoms: list[tuple[str, list[str]]] = []

    def to_formula(self) -> SimpleFormula:
        return SimpleFormula(
            tuple(self.free),
            tuple(self.bound),
            tuple(Atom(relation, tuple(args)) for relation, args in self.atoms),
        )


class DefinedRelationModel(BaseModel):
    name: str
    arity: int
    formula: FormulaModel


class QuotientEntry(BaseModel):
    row: list[int]
    image: int


class InterpretStepModel(BaseModel):
    kind: Literal["interpret"]
    dimension: int = 1
    domain: FormulaModel | None = None
    quotient: list[QuotientEntry] | None = None
    relations: list[DefinedRelationModel]

    def interpretation(self, s: Structure) -> SimpleInterpretation:
        n = self.dimension
        if self.domain is not None:
            domain = self.domain.to_formula()
        else:
            domain = SimpleFormula(tuple(f"x{i}" for i in range(n)))
        if self.quotient is not None:
            quotient = {tuple(e.row): e.image for e in self.quotient}
        else:
            rows = sorted(CompiledFormula(s, domain).relation())
            quotient = {row: i for i, row in enumerate(rows)}
        return SimpleInterpretation(
            dimension=n,
            domain_formula=domain,
            quotient_map=quotient,
            target_signature=Signature.of(*((r.name, r.arity) for r in self.relations)),
            preimage_formulas={r.name: r.formula.to_formula() for r in self.relations},
        )


class EquivalenceStepModel(BaseModel):
    kind: Literal["equivalence"]
    target: StructureModel


class SingletonStepModel(BaseModel):
    kind: Literal["singleton"]


StepModel = Annotated[
    InterpretStepModel | EquivalenceStepModel | SingletonStepModel, Field(discriminator="kind")
]


class ChainDocument(BaseModel):
    template: str | StructureModel
    steps: list[StepModel]


def load_chain(text: str, resolve: Callable[[str], Structure], source: str = "<input>") -> ConstructionChain:
    """Build a chain from its JSON document.

    A string template is handed to resolve (a fixture name or a file path).
    Binding the steps checks every interpretation and equivalence.

    Raises:
        FormatError: If the document does not match the schema or a
            formula is malformed.
        MalformedInterpretationError: If an interpretation fails its checks.
        PreconditionError: If an equivalence step's structures are not
            homomorphically equivalent.
    """
    try:
        doc = ChainDocument.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(f"{source}: invalid chain document: {e}") from e
    template = resolve(doc.template) if isinstance(doc.template, str) else doc.template.to_structure()

    steps: list[Step] = []
    current = template
    try:
        for model in doc.steps:
            if isinstance(model, InterpretStepModel):
                step: Step = InterpretStep(model.interpretation(current))
            elif isinstance(model, EquivalenceStepModel):
                step = EquivalenceStep(model.target.to_structure())
            else:
                step = SingletonStep()
            steps.append(step)
            current = step.bind(current).result
    except DomainError as e:
        raise FormatError(f"{source}: step {len(steps)}: {e}") from e
    return ConstructionChain(template, steps)
