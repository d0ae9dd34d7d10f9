"""pp-definability through closure under polymorphisms.

The closure of a relation r with m tuples is the set of images of the
columns of its tuple matrix under all m-ary polymorphisms, obtained as the
projection of the solutions of the m-ary indicator onto those columns.
"""

import logging
from collections.abc import Iterable

import numpy as np

from cspalgebra.domain.models import Instance, Row, Structure
from cspalgebra.engine.core.homomorphism import project_solutions
from cspalgebra.engine.exceptions import CapExceededError, PreconditionError
from cspalgebra.engine.polymorphism.identities import empty
from cspalgebra.engine.polymorphism.indicator import indicator_instance
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


def implies_equation(r: Iterable[Row], k: int) -> tuple[int, int] | None:
    """Least 1-based (i, j), i < j, such that every tuple of r has equal entries there.

    Raises:
        PreconditionError: If r is empty.
    """
    rows = sorted(set(r))
    if not rows:
        raise PreconditionError("implies_equation needs a non-empty relation")
    for i in range(k):
        for j in range(i + 1, k):
            if all(row[i] == row[j] for row in rows):
                return i + 1, j + 1
    return None


def column_codes(rows: list[Row], domain_size: int, k: int) -> list[int]:
    """Element of D^m encoded by each column of the m x k tuple matrix."""
    matrix = np.array(rows, dtype=np.int64).reshape(len(rows), k)
    shape = (domain_size,) * len(rows)
    return [int(np.ravel_multi_index(tuple(matrix[:, j]), shape)) for j in range(k)]


def power_instance(s: Structure, m: int, cap: int | None = None) -> Instance:
    """The instance whose solutions are the m-ary polymorphisms of s."""
    instance, _ = indicator_instance(s, empty(m), cap)
    return instance


def pp_closure(
    s: Structure, r: Iterable[Row], k: int, max_tuples: int | None = None
) -> frozenset[Row]:
    """Smallest relation pp-definable in s that contains r.

    Raises:
        CapExceededError: If r has more tuples than the configured bound or
            domain_size**|r| exceeds the power cap.
    """
    rows = sorted({tuple(row) for row in r})
    m = len(rows)
    if m == 0:
        return frozenset()
    max_tuples = max_tuples if max_tuples is not None else settings.pp_closure_max_tuples
    if m > max_tuples:
        raise CapExceededError("pp closure tuples", m, max_tuples)
    if s.domain_size**m > settings.power_cap:
        raise CapExceededError("pp closure power", s.domain_size**m, settings.power_cap)
    codes = column_codes(rows, s.domain_size, k)
    distinct = sorted(set(codes))
    projected = project_solutions(power_instance(s, m), s, distinct)
    slot = {c: i for i, c in enumerate(distinct)}
    closure = frozenset(tuple(t[slot[c]] for c in codes) for t in projected)
    logger.debug("pp closure of %d tuples: %d tuples", m, len(closure))
    return closure


def is_pp_definable(s: Structure, r: Iterable[Row], k: int) -> bool:
    rows = frozenset(tuple(row) for row in r)
    return pp_closure(s, rows, k) == rows
