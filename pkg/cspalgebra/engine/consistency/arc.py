"""Arc-consistency closure of excluded-value witnesses.

A template tuple t supports a constraint (x_1, ..., x_k) when no entry t_j
lies in the excluded set f(x_j); the closure adds a to f(x_i) whenever no
supporting tuple has a in position i. Positions are treated independently,
also when a variable repeats inside a constraint.
"""

import logging
import random
from collections import deque
from collections.abc import Sequence

from cspalgebra.domain.models import Instance, Row, Structure, Witness
from cspalgebra.engine.core.validation import require_same_signature

logger = logging.getLogger(__name__)


def supported_masks(rows: Sequence[Row], allowed: Sequence[int]) -> list[int]:
    """Values appearing at each position among the rows inside the allowed sets."""
    supported = [0] * len(allowed)
    for row in rows:
        if all((mask >> value) & 1 for mask, value in zip(allowed, row, strict=True)):
            for i, value in enumerate(row):
                supported[i] |= 1 << value
    return supported


def ac_closure(
    x: Instance,
    s: Structure,
    seed: Witness | None = None,
    rng: random.Random | None = None,
) -> Witness:
    """Least closed witness containing the seed.

    Args:
        x: Instance.
        s: Template.
        seed: Initial excluded sets; empty when omitted.
        rng: Shuffles the initial worklist; the fixpoint does not depend on it.
    """
    require_same_signature(x, s)
    full = (1 << s.domain_size) - 1
    excluded = list(seed.excluded) if seed is not None else [0] * x.variable_count
    constraints = list(x.iter_constraints())
    templates = [s.sorted_rows(i) for i in range(len(s.tables))]
    watch: list[list[int]] = [[] for _ in range(x.variable_count)]
    for cid, (_, row) in enumerate(constraints):
        for v in set(row):
            watch[v].append(cid)

    order = list(range(len(constraints)))
    if rng is not None:
        rng.shuffle(order)
    queue = deque(order)
    queued = set(order)
    revisions = 0
    while queue:
        cid = queue.popleft()
        queued.discard(cid)
        revisions += 1
        index, row = constraints[cid]
        allowed = [full & ~excluded[v] for v in row]
        supported = supported_masks(templates[index], allowed)
        for v, mask in zip(row, supported, strict=True):
            grown = excluded[v] | (full & ~mask)
            if grown != excluded[v]:
                excluded[v] = grown
                for other in watch[v]:
                    if other not in queued:
                        queued.add(other)
                        queue.append(other)
    logger.debug("arc consistency: %d revisions over %d constraints", revisions, len(constraints))
    return Witness(s.domain_size, tuple(excluded))


def good_witness(x: Instance, s: Structure) -> Witness | None:
    """Closure of the empty witness when every variable keeps a value, else None."""
    closure = ac_closure(x, s)
    return closure if closure.is_good else None


def is_arc_consistent(x: Instance, s: Structure) -> bool:
    return good_witness(x, s) is not None
