"""Existential-conjunctive formulas, interpretations and reduction certificates."""

from collections.abc import Mapping
from dataclasses import dataclass, field

from cspalgebra.domain.exceptions import MalformedFormulaError
from cspalgebra.domain.models.structure import Signature


@dataclass(frozen=True)
class Atom:
    """R(v1, ..., vk) over formula variable names."""

    relation: str
    variables: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.relation}({','.join(self.variables)})"


@dataclass(frozen=True)
class SimpleFormula:
    """(exists bound_vars) conjunction of atoms, optionally with equalities.

    Equality atoms are only allowed in pp mode; a simple formula has none.
    """

    free_vars: tuple[str, ...]
    bound_vars: tuple[str, ...] = ()
    atoms: tuple[Atom, ...] = ()
    equality_atoms: tuple[tuple[str, str], ...] = ()
    pp: bool = False

    def __post_init__(self) -> None:
        names = self.free_vars + self.bound_vars
        if len(set(names)) != len(names):
            raise MalformedFormulaError("Variable declared twice")
        known = set(names)
        for atom in self.atoms:
            missing = set(atom.variables) - known
            if missing:
                raise MalformedFormulaError(f"{atom} uses undeclared {sorted(missing)}")
        for a, b in self.equality_atoms:
            if a not in known or b not in known:
                raise MalformedFormulaError(f"Equality {a}={b} uses undeclared variables")
        if self.equality_atoms and not self.pp:
            raise MalformedFormulaError("Simple formulas cannot contain equality atoms")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.free_vars + self.bound_vars

    def __str__(self) -> str:
        body = " & ".join(
            [str(a) for a in self.atoms] + [f"{a}={b}" for a, b in self.equality_atoms]
        )
        prefix = f"exists {','.join(self.bound_vars)}. " if self.bound_vars else ""
        return f"({','.join(self.free_vars)}) -> {prefix}{body or 'true'}"


@dataclass(frozen=True)
class SimpleInterpretation:
    """A quotient of a structure simply definable in a power of the template.

    Attributes:
        dimension: The power n; elements of A are n-tuples of template elements.
        domain_formula: Formula with n free variables defining A.
        quotient_map: Total map A -> target elements 0..target_size-1.
        target_signature: Signature of the interpreted structure.
        preimage_formulas: Per target relation of arity k, a formula with k*n
            free variables (k blocks of n) defining the preimage of the relation.
    """

    dimension: int
    domain_formula: SimpleFormula
    quotient_map: Mapping[tuple[int, ...], int]
    target_signature: Signature
    preimage_formulas: Mapping[str, SimpleFormula]

    @property
    def target_size(self) -> int:
        return max(self.quotient_map.values(), default=-1) + 1


@dataclass(frozen=True)
class VariableOrigin:
    """Where an output variable of a reduction comes from."""

    kind: str
    source_variable: int | None = None
    relation: str | None = None
    row: tuple[int, ...] | None = None
    index: int | None = None


@dataclass(frozen=True)
class ReductionCertificate:
    """Degree accounting and provenance for one compiled instance."""

    kind: str
    source_variable_count: int
    output_variable_count: int
    provenance: tuple[VariableOrigin, ...]
    degree_multiplier: int
    max_input_degree: int
    max_output_degree: int
    notes: tuple[str, ...] = ()
    steps: tuple["ReductionCertificate", ...] = field(default=())

    @property
    def degree_bound_holds(self) -> bool:
        return self.max_output_degree <= self.degree_multiplier * max(1, self.max_input_degree)
