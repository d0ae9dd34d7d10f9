"""Polymorphism search for identity systems and the named checks built on it."""

import logging
from collections.abc import Mapping

import numpy as np

from cspalgebra.domain.models import (
    Certificate,
    IdentitySystem,
    Operation,
    PolymorphismWitness,
    Structure,
)
from cspalgebra.engine.core.products import row_selections
from cspalgebra.engine.exceptions import VerificationError
from cspalgebra.engine.polymorphism import identities, operations
from cspalgebra.engine.polymorphism.indicator import (
    build_layout,
    indicator_constraints,
    solve_indicator,
)
from cspalgebra.engine.polymorphism.preservation import preserves, violation

logger = logging.getLogger(__name__)


def failed_equation(ops: Mapping[str, Operation], ids: IdentitySystem) -> str | None:
    """The first equation the operations violate at some point, or None."""
    for equation in ids.equations:
        names = ids.abstract_variables(equation)
        grid = row_selections(next(iter(ops.values())).domain_size, len(names))
        position = {name: i for i, name in enumerate(names)}
        left, right = (
            ops[t.symbol].apply_columns(grid[[position[a] for a in t.args]]) for t in equation
        )
        if not np.array_equal(left, right):
            return f"{equation[0]}={equation[1]}"
    return None


def certify(
    ops: Mapping[str, Operation],
    ids: IdentitySystem,
    s: Structure,
    notes: tuple[str, ...] = (),
) -> PolymorphismWitness:
    """Re-check every equation pointwise and every relation, then wrap as a witness.

    Raises:
        VerificationError: If an equation or a relation fails.
    """
    missing = {name for name, _ in ids.symbols} - set(ops)
    if missing:
        raise VerificationError(f"Symbols without an operation: {sorted(missing)}")
    bad = failed_equation(ops, ids)
    if bad is not None:
        raise VerificationError(f"Identity {bad} fails")
    for name, op in ops.items():
        broken = violation(op, s)
        if broken is not None:
            raise VerificationError(f"{name} does not preserve {broken[0]} on rows {broken[1]}")
    d = s.domain_size
    checked = sum(d ** len(ids.abstract_variables(eq)) for eq in ids.equations)
    return PolymorphismWitness(
        dict(ops),
        Certificate(ids.name, checked, s.signature.names, notes),
    )


def find_polymorphism(
    s: Structure, ids: IdentitySystem, cap: int | None = None
) -> PolymorphismWitness | None:
    """Operations satisfying the identities and preserving s, or None.

    Raises:
        CapExceededError: If the indicator exceeds the cap.
    """
    layout = build_layout(s, ids, cap)
    constraints = indicator_constraints(s, layout, cap)
    values = solve_indicator(s, layout, constraints)
    if values is None:
        logger.debug("no %s polymorphism", ids.name)
        return None
    witness = certify(layout.decode(values), ids, s)
    logger.debug("found %s polymorphism", ids.name)
    return witness


def check_siggers(s: Structure, cap: int | None = None) -> PolymorphismWitness | None:
    return find_polymorphism(s, identities.siggers(), cap)


def check_wnu(s: Structure, n: int, cap: int | None = None) -> PolymorphismWitness | None:
    return find_polymorphism(s, identities.wnu(n), cap)


def check_cyclic(s: Structure, p: int, cap: int | None = None) -> PolymorphismWitness | None:
    """A cyclic polymorphism of arity p; for p = 1 the identity operation."""
    if p == 1:
        return certify({"c": operations.identity(s.domain_size)}, identities.cyclic(1), s)
    return find_polymorphism(s, identities.cyclic(p), cap)


def check_dual_discriminator(s: Structure) -> bool:
    return preserves(operations.dual_discriminator(s.domain_size), s)
