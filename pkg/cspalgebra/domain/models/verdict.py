"""Template verdicts."""

from dataclasses import dataclass, field
from enum import Enum

from cspalgebra.domain.models.operation import PolymorphismWitness
from cspalgebra.domain.models.structure import Structure


class Status(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class BooleanBucket(Enum):
    """Clone buckets for two-element templates."""

    TOTALLY_SYMMETRIC = "totally-symmetric"
    TWO_SAT_CONSTRUCTIBLE = "2SAT-constructible"
    INTRACTABLE = "intractable"
    AFFINE = "affine"
    NOT_BOOLEAN = "not-boolean"

    @property
    def number(self) -> int | None:
        return {
            BooleanBucket.TOTALLY_SYMMETRIC: 1,
            BooleanBucket.TWO_SAT_CONSTRUCTIBLE: 2,
            BooleanBucket.INTRACTABLE: 3,
            BooleanBucket.AFFINE: 4,
        }.get(self)


@dataclass(frozen=True)
class CheckResult:
    """One yes/no/unknown check; yes carries a witness, no the exhausted bound."""

    status: Status
    witness: PolymorphismWitness | None = None
    note: str = ""
    arity: int | None = None
    # structure the witness was certified against
    structure: Structure | None = None

    @property
    def ok(self) -> bool:
        return self.status is Status.YES


@dataclass(frozen=True)
class BooleanVerdict:
    bucket: BooleanBucket
    operation: str | None = None
    witness: PolymorphismWitness | None = None


@dataclass(frozen=True)
class GraphVerdict:
    """Bipartiteness against the Siggers search on the core."""

    bipartite: bool
    core_size: int
    tractable: bool
    siggers_agrees: bool


@dataclass(frozen=True)
class DigraphVerdict:
    """Smooth digraph: tractable iff the core is a disjoint union of directed cycles."""

    core_size: int
    core_is_cycle_union: bool
    tractable: bool
    siggers_agrees: bool


@dataclass(frozen=True)
class Evidence:
    kind: str
    description: str
    witness: PolymorphismWitness | None = None
    structure: Structure | None = None


@dataclass(frozen=True)
class Verdict:
    """Every dichotomy test the library can run on one template."""

    template_id: str
    tractable: CheckResult
    width1: CheckResult
    dual_discriminator: CheckResult
    boolean: BooleanVerdict
    graph: GraphVerdict | None = None
    smooth_digraph: DigraphVerdict | None = None
    labels: tuple[str, ...] = ()
    evidence: tuple[Evidence, ...] = field(default=())
