"""Evaluating existential-conjunctive formulas and building simple definitions."""

import logging
from collections.abc import Iterable, Sequence

from cspalgebra.domain.exceptions import MalformedFormulaError
from cspalgebra.domain.models import Atom, Instance, Row, SimpleFormula, Structure
from cspalgebra.engine.core.cores import automorphism_orbits, is_core
from cspalgebra.engine.core.homomorphism import find_homomorphism, project_solutions
from cspalgebra.engine.exceptions import NotACoreError
from cspalgebra.engine.polymorphism.closure import (
    column_codes,
    implies_equation,
    is_pp_definable,
    power_instance,
)

logger = logging.getLogger(__name__)


def eq_c_name(c: int) -> str:
    return f"eq{c}"


class CompiledFormula:
    """A formula read as an instance over the template signature.

    Equality atoms merge their variables; ids follow first declaration, so
    free variables come first.
    """

    def __init__(self, s: Structure, phi: SimpleFormula) -> None:
        self.template = s
        self.formula = phi
        parent = {name: name for name in phi.variables}

        def find(name: str) -> str:
            while parent[name] != name:
                parent[name] = parent[parent[name]]
                name = parent[name]
            return name

        for a, b in phi.equality_atoms:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb, key=phi.variables.index)] = min(
                    ra, rb, key=phi.variables.index
                )
        ids: dict[str, int] = {}
        self.ids: dict[str, int] = {}
        for name in phi.variables:
            root = find(name)
            if root not in ids:
                ids[root] = len(ids)
            self.ids[name] = ids[root]

        constraints: dict[str, list[Row]] = {}
        for atom in phi.atoms:
            arity = s.signature.arity(atom.relation)
            if arity != len(atom.variables):
                raise MalformedFormulaError(
                    f"{atom} has {len(atom.variables)} arguments, relation arity is {arity}"
                )
            constraints.setdefault(atom.relation, []).append(
                tuple(self.ids[v] for v in atom.variables)
            )
        self.instance = Instance.create(len(ids), s.signature, constraints)

    def seed(self, args: Sequence[int]) -> dict[int, int] | None:
        """Seed fixing the free variables, or None when merged ones disagree."""
        if len(args) != len(self.formula.free_vars):
            raise MalformedFormulaError(
                f"Formula has {len(self.formula.free_vars)} free variables, got {len(args)} values"
            )
        seed: dict[int, int] = {}
        for name, value in zip(self.formula.free_vars, args, strict=True):
            v = self.ids[name]
            if seed.setdefault(v, int(value)) != int(value):
                return None
        return seed

    def holds(self, args: Sequence[int]) -> bool:
        seed = self.seed(args)
        return seed is not None and find_homomorphism(self.instance, self.template, seed) is not None

    def least_witness(self, args: Sequence[int]) -> dict[str, int] | None:
        """Lexicographically least values of the bound variables, in declaration order."""
        seed = self.seed(args)
        if seed is None:
            return None
        solution = find_homomorphism(self.instance, self.template, seed, order="index")
        if solution is None:
            return None
        return {name: solution[self.ids[name]] for name in self.formula.bound_vars}

    def relation(self) -> frozenset[Row]:
        """Every tuple of free-variable values satisfying the formula."""
        free = [self.ids[name] for name in self.formula.free_vars]
        if not free:
            solvable = find_homomorphism(self.instance, self.template) is not None
            return frozenset({()}) if solvable else frozenset()
        distinct = list(dict.fromkeys(free))
        projected = project_solutions(self.instance, self.template, distinct)
        slot = {v: i for i, v in enumerate(distinct)}
        return frozenset(tuple(t[slot[v]] for v in free) for t in projected)


def evaluate_formula(s: Structure, phi: SimpleFormula, args: Sequence[int]) -> bool:
    """True iff some values of the bound variables satisfy every atom.

    Raises:
        MalformedFormulaError: If args does not match the free variables or
            an atom has the wrong arity.
        SignatureError: If an atom names an unknown relation.
    """
    return CompiledFormula(s, phi).holds(args)


def least_witness(s: Structure, phi: SimpleFormula, args: Sequence[int]) -> dict[str, int] | None:
    return CompiledFormula(s, phi).least_witness(args)


def formula_relation(s: Structure, phi: SimpleFormula) -> frozenset[Row]:
    return CompiledFormula(s, phi).relation()


def _endomorphism_atoms(s: Structure, names: Sequence[str]) -> list[Atom]:
    """Atoms saying d -> names[d] is an endomorphism of s."""
    return [
        Atom(symbol.name, tuple(names[v] for v in row))
        for symbol, table in s.items()
        for row in sorted(table)
    ]


def eq_c_formula(s: Structure, c: int) -> SimpleFormula:
    """Simple formula for a = b with b in the automorphism orbit of c.

    Two endomorphisms agreeing off c, one sending c to a and one to b.

    Raises:
        NotACoreError: If s is not a core.
    """
    if not is_core(s):
        raise NotACoreError("(=_c) formulas need a core")
    bound = [f"x{d}" for d in s.elements]
    first = ["a" if d == c else bound[d] for d in s.elements]
    second = ["b" if d == c else bound[d] for d in s.elements]
    atoms = dict.fromkeys(_endomorphism_atoms(s, first) + _endomorphism_atoms(s, second))
    return SimpleFormula(
        ("a", "b"),
        tuple(name for d, name in enumerate(bound) if d != c),
        tuple(atoms),
    )


def eq_c_relation(s: Structure, c: int) -> frozenset[Row]:
    """The orbit diagonal {(a, a) : a in the orbit of c}, from automorphisms."""
    orbit = next(o for o in automorphism_orbits(s) if c in o)
    return frozenset((a, a) for a in orbit)


def simple_definition_equation_free(
    s: Structure, r: Iterable[Row], k: int
) -> SimpleFormula | None:
    """Equality-free definition of r, quantifying over the columns of the power.

    Returns:
        The formula, or None when r is empty, implies an equation or is
        not pp-definable in s.

    Raises:
        CapExceededError: From the pp-closure caps.
    """
    rows = sorted({tuple(row) for row in r})
    if not rows:
        return None
    equation = implies_equation(rows, k)
    if equation is not None:
        logger.info("relation implies x%d = x%d; no equality-free definition", *equation)
        return None
    free = tuple(f"x{i + 1}" for i in range(k))
    for symbol, table in s.items():
        if symbol.arity == k and table == frozenset(rows):
            return SimpleFormula(free, (), (Atom(symbol.name, free),))
    if not is_pp_definable(s, rows, k):
        return None
    m = len(rows)
    codes = column_codes(rows, s.domain_size, k)
    names = [f"z{u}" for u in range(s.domain_size**m)]
    for i, code in enumerate(codes):
        names[code] = f"x{i + 1}"
    power = power_instance(s, m)
    atoms = [
        Atom(symbol.name, tuple(names[v] for v in row))
        for symbol, table in power.items()
        for row in sorted(table)
    ]
    bound = tuple(name for name in names if name not in free)
    return SimpleFormula(free, bound, tuple(atoms))
