"""Eliminating singleton unary relations from instances over a core.

Every variable v of the source keeps its place and also gets its own copy of
the template on the vertices (v, a). Variables sharing a constraint have
their copies tied by eq<c> links, and U<d>(v) becomes eq<d>(v, (v, d)). On a
solution h the copy of v is mapped by an automorphism, and undoing it puts
every U<d> variable back on d.
"""

import logging
from collections.abc import Sequence

from cspalgebra.domain.models import (
    Assignment,
    Atom,
    Instance,
    Row,
    Signature,
    SimpleFormula,
    Structure,
    VariableOrigin,
)
from cspalgebra.engine.construction.formulas import eq_c_formula, eq_c_name, eq_c_relation
from cspalgebra.engine.construction.interpretation import (
    definition_interpretation,
    reduce_interpretation,
)
from cspalgebra.engine.construction.reduction import CompiledReduction, ComposedReduction
from cspalgebra.engine.core.cores import is_core
from cspalgebra.engine.core.products import singleton_expansion, singleton_names
from cspalgebra.engine.exceptions import (
    NotACoreError,
    PreconditionError,
    SignatureMismatchError,
    VerificationError,
)

logger = logging.getLogger(__name__)

MISSING_EQ = "missing (=_c) relations"


def eq_names(s: Structure) -> list[str]:
    return [eq_c_name(c) for c in s.elements]


def base_reduct(s: Structure) -> Structure:
    """s without its eq<c> relations."""
    eq = set(eq_names(s))
    return s.restrict_signature(name for name in s.signature.names if name not in eq)


def ensure_eq_relations(s: Structure) -> tuple[Structure, tuple[str, ...]]:
    """s with every eq<c> relation present, and the names that were added.

    Raises:
        NotACoreError: If s is not a core.
        PreconditionError: If an existing eq<c> is not the orbit diagonal of c.
    """
    base = base_reduct(s)
    if not is_core(base):
        raise NotACoreError("singleton elimination needs a core template")
    added = {}
    for c in s.elements:
        name = eq_c_name(c)
        expected = eq_c_relation(base, c)
        if name in s.signature.names:
            if s.signature.arity(name) != 2 or s.relation(name) != expected:
                raise PreconditionError(f"'{name}' is not the automorphism orbit diagonal of {c}")
        else:
            added[name] = sorted(expected)
    if added:
        logger.info("injecting %d (=_c) relations", len(added))
    return s.with_relations(added, dict.fromkeys(added, 2)), tuple(added)


class SingletonReduction(CompiledReduction):
    """Instance over the singleton expansion compiled to one over the core."""

    kind = "singleton"

    def __init__(self, x: Instance, s: Structure, source_template: Structure) -> None:
        n, d = x.variable_count, s.domain_size
        base = base_reduct(s)
        self._d = d

        def copy(v: int, a: int) -> int:
            return n + v * d + a

        provenance = [VariableOrigin("x", source_variable=v) for v in x.variables]
        provenance += [
            VariableOrigin("copy", source_variable=v, index=a) for v in x.variables for a in range(d)
        ]
        tables: dict[str, set[Row]] = {name: set() for name in s.signature.names}
        singletons = {name: c for c, name in singleton_names(s).items()}
        linked: set[tuple[int, int]] = set()
        for symbol, table in x.items():
            for row in table:
                c = singletons.get(symbol.name)
                if c is not None and symbol.name not in s.signature.names:
                    (v,) = row
                    tables[eq_c_name(c)].add((v, copy(v, c)))
                else:
                    tables[symbol.name].add(row)
                members = sorted(set(row))
                linked.update(
                    (u, w) for i, u in enumerate(members) for w in members[i + 1 :]
                )
        for v in x.variables:
            for symbol, table in base.items():
                tables[symbol.name].update(tuple(copy(v, a) for a in row) for row in table)
        for u, w in linked:
            for c in s.elements:
                tables[eq_c_name(c)].add((copy(u, c), copy(w, c)))

        output = Instance.create(len(provenance), s.signature, tables)
        multiplier = 1 + base.tuple_count + s.max_arity
        super().__init__(x, source_template, output, s, provenance, multiplier)

    def _push(self, g: Assignment) -> Sequence[int]:
        return list(g.values) + [a for _ in self.source.variables for a in range(self._d)]

    def _pull(self, h: Assignment) -> Sequence[int]:
        n, d = self.source.variable_count, self._d
        values = []
        for v in self.source.variables:
            sigma = h.values[n + v * d : n + (v + 1) * d]
            if len(set(sigma)) != d:
                raise VerificationError(f"copy of the template at variable {v} is not bijective")
            values.append(sigma.index(h[v]))
        return values


def _expanded_signature(s: Structure) -> Signature:
    return singleton_expansion(s).signature


def _require_expansion_signature(x: Instance, s: Structure) -> None:
    allowed = {symbol.name: symbol.arity for symbol in _expanded_signature(s)}
    for symbol in x.signature:
        if allowed.get(symbol.name) != symbol.arity:
            raise SignatureMismatchError(
                f"relation '{symbol.name}' is not in the singleton expansion of the template"
            )


def reduce_singleton_expansion(x: Instance, s: Structure) -> SingletonReduction:
    """Compile an instance using U<d> singletons to one over the core s.

    s must already carry every eq<c> relation; relations of x are matched to
    the singleton expansion of s by name.

    Raises:
        NotACoreError: If s without its eq<c> relations is not a core.
        PreconditionError: If an eq<c> relation is missing or wrong.
        SignatureMismatchError: If x uses a relation the expansion lacks.
    """
    completed, added = ensure_eq_relations(s)
    if added:
        raise PreconditionError(MISSING_EQ)
    _require_expansion_signature(x, s)
    expanded = singleton_expansion(s)
    source_template = Structure(
        s.domain_size, x.signature, tuple(expanded.relation(name) for name in x.signature.names)
    )
    return SingletonReduction(x, completed, source_template)


def eq_definitions(s: Structure) -> dict[str, SimpleFormula]:
    """Simple definitions in s of its relations and of every eq<c>."""
    base = base_reduct(s)
    formulas = {}
    for symbol in base.signature:
        free = tuple(f"x{i + 1}" for i in range(symbol.arity))
        formulas[symbol.name] = SimpleFormula(free, (), (Atom(symbol.name, free),))
    for c in s.elements:
        formulas[eq_c_name(c)] = eq_c_formula(base, c)
    return formulas


def compile_singletons(x: Instance, s: Structure) -> CompiledReduction:
    """Compile an instance over the singleton expansion of s to one over s itself.

    When s lacks the eq<c> relations they are added for the singleton step
    and then expanded through their simple definitions, so the final
    instance only uses relations of s.
    """
    completed, added = ensure_eq_relations(s)
    if not added:
        return reduce_singleton_expansion(x, s)
    _require_expansion_signature(x, s)
    first = reduce_singleton_expansion(x, completed)
    interp = definition_interpretation(s, completed.signature, eq_definitions(completed))
    second = reduce_interpretation(first.output, s, interp)
    return ComposedReduction(
        [first, second],
        notes=[f"injected {', '.join(added)} through their simple definitions"],
    )
