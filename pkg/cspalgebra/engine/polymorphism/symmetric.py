"""Totally symmetric polymorphisms, searched over argument sets.

A totally symmetric operation of arity n is a function of the set of its
arguments, so the search has one variable per non-empty subset of D with
at most n elements. Applying the operation to n rows of a relation gives
the tuple of its values on the column sets; the reachable tuples of column
sets are enumerated breadth first over the number of rows used.
"""

import logging
from itertools import product

import numpy as np

from cspalgebra.domain.models import Instance, Operation, PolymorphismWitness, Structure
from cspalgebra.engine.core.search import HomomorphismSearch
from cspalgebra.engine.exceptions import CapExceededError, VerificationError
from cspalgebra.engine.polymorphism.checks import certify
from cspalgebra.engine.polymorphism.identities import empty
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


def column_set_tuples(rows: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    """Tuples of column masks obtainable from at most n rows (repetition allowed)."""
    singles = {tuple(1 << v for v in row) for row in rows}
    reached = set(singles)
    frontier = set(singles)
    for _ in range(n - 1):
        nxt = set()
        for masks in frontier:
            for single in singles:
                grown = tuple(a | b for a, b in zip(masks, single, strict=True))
                if grown not in reached:
                    nxt.add(grown)
        if not nxt:
            break
        reached |= nxt
        frontier = nxt
    return reached


def set_instance(s: Structure, n: int) -> tuple[Instance, list[int]]:
    """Instance over s whose variables are argument sets, numbered in mask order."""
    masks = [m for m in range(1, 1 << s.domain_size) if m.bit_count() <= n]
    index = {m: i for i, m in enumerate(masks)}
    tables = []
    for i in range(len(s.signature)):
        reachable = column_set_tuples(s.sorted_rows(i), n)
        tables.append(frozenset(tuple(index[m] for m in column) for column in reachable))
    return Instance(len(masks), s.signature, tuple(tables)), masks


def operation_from_sets(domain_size: int, n: int, value_of: dict[int, int]) -> Operation:
    table = []
    for args in product(range(domain_size), repeat=n):
        mask = 0
        for a in args:
            mask |= 1 << a
        table.append(value_of[mask])
    return Operation(domain_size, n, np.array(table, dtype=np.int64))


def depends_only_on_set(op: Operation) -> bool:
    seen: dict[frozenset[int], int] = {}
    for args in product(range(op.domain_size), repeat=op.arity):
        value = op(*args)
        if seen.setdefault(frozenset(args), value) != value:
            return False
    return True


def check_totally_symmetric(
    s: Structure, n: int, cap: int | None = None
) -> PolymorphismWitness | None:
    """A totally symmetric polymorphism of arity n, or None.

    Raises:
        CapExceededError: If domain_size**n exceeds the cap.
    """
    if n < 1:
        raise ValueError("arity must be >= 1")
    cap = cap if cap is not None else settings.power_cap
    if s.domain_size**n > cap:
        raise CapExceededError("totally symmetric table", s.domain_size**n, cap)
    x, masks = set_instance(s, n)
    values = HomomorphismSearch(x, s).run()
    if values is None:
        logger.debug("no totally symmetric polymorphism of arity %d", n)
        return None
    op = operation_from_sets(s.domain_size, n, dict(zip(masks, values, strict=True)))
    if not depends_only_on_set(op):
        raise VerificationError("Operation is not totally symmetric")
    return certify({"t": op}, empty(n, "t"), s, ("value depends only on the argument set",))

