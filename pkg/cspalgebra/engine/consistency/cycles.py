"""Closed-path enumeration and the cycle-consistency audit.

A closed path alternates variables and constraint occurrences; every step
enters its occurrence at one coordinate and leaves at another. The audit
asks, for each path x_1 ... x_n x_1 and each a in U_{x_1}, for a chain
a = a_1, a_2, ..., a_n, a_1 with a_i in U_{x_i} and every consecutive pair in
the projection of the step's relation onto its two coordinates.
"""

import logging
from collections.abc import Iterator

import numpy as np

from cspalgebra.domain.models import (
    ClosedPath,
    CycleAudit,
    Instance,
    PathStep,
    Structure,
    Witness,
)
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.exceptions import CapExceededError, PreconditionError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


def _steps_from(x: Instance) -> list[list[PathStep]]:
    """Every (occurrence, j, k) step leaving each variable, in canonical order."""
    leaving: list[list[PathStep]] = [[] for _ in x.variables]
    for index, row in x.iter_constraints():
        for j, v in enumerate(row):
            for k in range(len(row)):
                if k != j:
                    leaving[v].append(PathStep(index, row, j, k))
    return leaving


def iter_closed_paths(x: Instance, max_len: int | None = None) -> Iterator[ClosedPath]:
    """Simple closed paths, each in both orientations, from its least variable.

    Variables other than the start are distinct and greater than it, and no
    constraint occurrence is used twice.
    """
    leaving = _steps_from(x)

    def extend(
        start: int, variables: list[int], steps: list[PathStep], used: set
    ) -> Iterator[ClosedPath]:
        if max_len is not None and len(steps) >= max_len:
            return
        for step in leaving[variables[-1]]:
            occurrence = (step.relation, step.row)
            if occurrence in used:
                continue
            nxt = step.row[step.k]
            if nxt == start:
                yield ClosedPath(tuple(variables) + (start,), tuple(steps) + (step,))
            elif nxt > start and nxt not in variables:
                used.add(occurrence)
                variables.append(nxt)
                steps.append(step)
                yield from extend(start, variables, steps, used)
                steps.pop()
                variables.pop()
                used.discard(occurrence)

    for start in x.variables:
        yield from extend(start, [start], [], set())


def projection_matrix(s: Structure, step: PathStep) -> np.ndarray:
    """Boolean d x d matrix of the (j, k)-projection of the step's relation."""
    d = s.domain_size
    matrix = np.zeros((d, d), dtype=bool)
    rows = s.tables[step.relation]
    if rows:
        array = np.array(sorted(rows), dtype=np.int64)
        matrix[array[:, step.j], array[:, step.k]] = True
    return matrix


def _allowed_vector(w: Witness, variable: int) -> np.ndarray:
    mask = w.allowed_mask(variable)
    return np.array([(mask >> a) & 1 for a in range(w.domain_size)], dtype=bool)


def path_matrix(path: ClosedPath, s: Structure, w: Witness) -> np.ndarray:
    """Reachability matrix of the whole path under the witness sets."""
    d = s.domain_size
    reach = np.eye(d, dtype=bool)
    for variable, step in zip(path.variables[:-1], path.steps, strict=True):
        step_matrix = _allowed_vector(w, variable)[:, None] & projection_matrix(s, step)
        reach = (reach.astype(np.int64) @ step_matrix.astype(np.int64)) > 0
    return reach


def returning_values(path: ClosedPath, s: Structure, w: Witness) -> frozenset[int]:
    """Values a in U_{x_1} with a chain around the path back to a."""
    reach = path_matrix(path, s, w)
    return frozenset(a for a in w.allowed(path.start) if reach[a, a])


def cycle_consistency_audit(
    x: Instance,
    s: Structure,
    w: Witness,
    max_len: int | None = None,
    cap: int | None = None,
) -> CycleAudit:
    """Check every simple closed path up to max_len, in every rotation.

    Args:
        x: Instance.
        s: Template.
        w: Good witness for x.
        max_len: Longest path checked; None checks all simple cycles.
        cap: Most closed paths enumerated. Defaults to settings.

    Returns:
        PASS, or the first failing rotated path with its least failing value.

    Raises:
        PreconditionError: If w is not a good witness of the right size.
        CapExceededError: If more closed paths exist than the cap.
    """
    require_same_signature(x, s)
    if max_len is not None and max_len < 1:
        raise PreconditionError("max_len must be positive")
    if w.variable_count != x.variable_count or w.domain_size != s.domain_size or not w.is_good:
        raise PreconditionError("audit needs a good witness for the instance")
    cap = settings.cycle_enumeration_cap if cap is None else cap

    paths = []
    for path in iter_closed_paths(x, max_len):
        paths.append(path)
        if len(paths) > cap:
            raise CapExceededError("closed paths", None, cap)

    checked = 0
    for path in paths:
        for offset in range(len(path)):
            rotated = path.rotate(offset)
            checked += 1
            missing = sorted(set(w.allowed(rotated.start)) - returning_values(rotated, s, w))
            if missing:
                logger.debug("cycle audit failed after %d paths", checked)
                return CycleAudit(False, max_len, checked, rotated, missing[0])
    logger.debug("cycle audit passed %d paths", checked)
    return CycleAudit(True, max_len, checked)
