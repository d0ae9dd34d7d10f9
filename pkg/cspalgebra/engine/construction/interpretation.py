"""Interpretations in powers of a template and the instance compiler for them.

An instance x over the interpreted structure becomes an instance over the
template: every variable v gets a block of n variables y_v, constrained by a
copy of the domain formula, and every constraint R(v_1, ..., v_k) becomes a
copy of R's preimage formula over the blocks y_{v_1} ... y_{v_k}. Bound
variables of each copy are fresh.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Mapping, Sequence
from itertools import product

from cspalgebra.domain.models import (
    Assignment,
    Instance,
    Row,
    Signature,
    SimpleFormula,
    SimpleInterpretation,
    Structure,
    VariableOrigin,
)
from cspalgebra.engine.construction.formulas import CompiledFormula
from cspalgebra.engine.construction.reduction import CompiledReduction
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.exceptions import MalformedInterpretationError, VerificationError

logger = logging.getLogger(__name__)


def _require_simple(phi: SimpleFormula, free: int, what: str) -> None:
    if phi.pp or phi.equality_atoms:
        raise MalformedInterpretationError(f"{what} is not a simple formula")
    if len(phi.free_vars) != free:
        raise MalformedInterpretationError(
            f"{what} has {len(phi.free_vars)} free variables, expected {free}"
        )


def validate_interpretation(s: Structure, interp: SimpleInterpretation) -> Structure:
    """The structure interp defines in s, after checking its invariants.

    Raises:
        MalformedInterpretationError: If a formula is not simple or has the
            wrong number of free variables, the quotient map is not a
            surjection from the defined set A, or a preimage leaves A or is
            not a union of quotient classes.
    """
    n = interp.dimension
    if n < 1:
        raise MalformedInterpretationError(f"dimension must be positive, got {n}")
    _require_simple(interp.domain_formula, n, "domain formula")
    domain = CompiledFormula(s, interp.domain_formula).relation()
    quotient = {tuple(key): value for key, value in interp.quotient_map.items()}
    if set(quotient) != domain:
        raise MalformedInterpretationError(
            f"quotient map is defined on {len(quotient)} tuples, the domain formula on {len(domain)}"
        )
    size = interp.target_size
    if set(quotient.values()) != set(range(size)):
        raise MalformedInterpretationError("quotient map is not onto 0..target_size-1")
    classes: dict[int, list[Row]] = defaultdict(list)
    for key in sorted(quotient):
        classes[quotient[key]].append(key)

    names = set(interp.target_signature.names)
    extra = set(interp.preimage_formulas) - names
    if extra:
        raise MalformedInterpretationError(f"formulas for unknown relations {sorted(extra)}")
    tables: list[frozenset[Row]] = []
    for symbol in interp.target_signature:
        phi = interp.preimage_formulas.get(symbol.name)
        if phi is None:
            raise MalformedInterpretationError(f"no preimage formula for '{symbol.name}'")
        _require_simple(phi, symbol.arity * n, f"formula for '{symbol.name}'")
        preimage = CompiledFormula(s, phi).relation()
        image = set()
        for row in preimage:
            blocks = [row[i * n : (i + 1) * n] for i in range(symbol.arity)]
            if any(block not in quotient for block in blocks):
                raise MalformedInterpretationError(
                    f"preimage of '{symbol.name}' leaves the interpreted domain"
                )
            image.add(tuple(quotient[block] for block in blocks))
        for target in image:
            for blocks in product(*(classes[e] for e in target)):
                if tuple(v for block in blocks for v in block) not in preimage:
                    raise MalformedInterpretationError(
                        f"preimage of '{symbol.name}' is not closed under the quotient"
                    )
        tables.append(frozenset(image))
    return Structure(size, interp.target_signature, tuple(tables))


def definition_interpretation(
    s: Structure, signature: Signature, formulas: Mapping[str, SimpleFormula]
) -> SimpleInterpretation:
    """Dimension-one interpretation of the structure the formulas define in s."""
    return SimpleInterpretation(
        dimension=1,
        domain_formula=SimpleFormula(("x",)),
        quotient_map={(a,): a for a in s.elements},
        target_signature=signature,
        preimage_formulas=dict(formulas),
    )


class InterpretationReduction(CompiledReduction):
    """Instance over the interpreted structure compiled to one over the template."""

    kind = "interpretation"

    def __init__(
        self, x: Instance, s: Structure, interp: SimpleInterpretation, target: Structure
    ) -> None:
        self.interpretation = interp
        n = interp.dimension
        self._domain = CompiledFormula(s, interp.domain_formula)
        self._formulas = {
            name: CompiledFormula(s, phi) for name, phi in interp.preimage_formulas.items()
        }
        self._least: dict[int, tuple[int, ...]] = {}
        for key in sorted(interp.quotient_map):
            self._least.setdefault(interp.quotient_map[key], tuple(key))

        provenance = [
            VariableOrigin("y", source_variable=v, index=i)
            for v in x.variables
            for i in range(n)
        ]
        tables: list[set[Row]] = [set() for _ in s.signature]
        # (formula, seed variables, bound variable ids) per copy, for pushforward.
        self._copies: list[tuple[CompiledFormula, tuple[int, ...], dict[str, int]]] = []

        def copy(
            formula: CompiledFormula,
            free: tuple[int, ...],
            origin: Callable[[int], VariableOrigin],
        ) -> None:
            ids = dict(zip(formula.formula.free_vars, free, strict=True))
            bound: dict[str, int] = {}
            for i, name in enumerate(formula.formula.bound_vars):
                bound[name] = ids[name] = len(provenance)
                provenance.append(origin(i))
            for atom in formula.formula.atoms:
                index = s.signature.index(atom.relation)
                tables[index].add(tuple(ids[name] for name in atom.variables))
            self._copies.append((formula, free, bound))

        for v in x.variables:
            block = tuple(range(v * n, (v + 1) * n))
            copy(self._domain, block, lambda i, v=v: VariableOrigin("zA", source_variable=v, index=i))
        for index, row in x.iter_constraints():
            name = x.signature.relations[index].name
            blocks = tuple(u * n + i for u in row for i in range(n))
            copy(
                self._formulas[name],
                blocks,
                lambda i, name=name, row=row: VariableOrigin("zR", relation=name, row=row, index=i),
            )
        output = Instance(len(provenance), s.signature, tuple(frozenset(t) for t in tables))
        atoms_a = len(interp.domain_formula.atoms)
        atoms_r = max((len(phi.atoms) for phi in interp.preimage_formulas.values()), default=0)
        super().__init__(x, target, output, s, provenance, atoms_a + atoms_r + 1)

    def _push(self, g: Assignment) -> Sequence[int]:
        n = self.interpretation.dimension
        values = [0] * self.output.variable_count
        for v in self.source.variables:
            values[v * n : (v + 1) * n] = self._least[g[v]]
        for formula, free, bound in self._copies:
            witness = formula.least_witness([values[u] for u in free])
            if witness is None:
                raise VerificationError("preimage formula has no witness on chosen blocks")
            for name, u in bound.items():
                values[u] = witness[name]
        return values

    def _pull(self, h: Assignment) -> Sequence[int]:
        n = self.interpretation.dimension
        quotient = self.interpretation.quotient_map
        values = []
        for v in self.source.variables:
            block = tuple(h.values[v * n : (v + 1) * n])
            if block not in quotient:
                raise VerificationError(f"block of variable {v} is outside the interpreted domain")
            values.append(quotient[block])
        return values


def reduce_interpretation(
    x: Instance, s: Structure, interp: SimpleInterpretation
) -> InterpretationReduction:
    """Compile x, an instance of the structure interp defines in s, to an instance of s.

    Raises:
        MalformedInterpretationError: If interp fails validation.
        SignatureMismatchError: If x is not over the interpreted signature.
    """
    target = validate_interpretation(s, interp)
    require_same_signature(x, target)
    return InterpretationReduction(x, s, interp, target)
