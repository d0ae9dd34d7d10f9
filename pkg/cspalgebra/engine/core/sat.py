"""CNF encoding of homomorphism search, solved with python-sat.

One boolean per (variable, value) with exactly-one constraints; binary
constraints become support clauses and wider ones go through one selector
per template row.
"""

import logging
from collections.abc import Mapping, Sequence

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Solver

from cspalgebra.domain.models import Instance, Structure
from cspalgebra.engine.core.search import iter_bits, project_rows, scope_and_pattern
from cspalgebra.engine.exceptions import EngineError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


class SatSearchError(EngineError):
    """The SAT back-end failed to run."""

    pass


def _exactly_one(lits: list[int], pool: IDPool) -> list[list[int]]:
    clauses = [lits]
    if len(lits) <= 5:
        clauses.extend([-a, -b] for i, a in enumerate(lits) for b in lits[i + 1 :])
    else:
        clauses.extend(CardEnc.atmost(lits=lits, bound=1, vpool=pool, encoding=EncType.seqcounter).clauses)
    return clauses


def encode(
    x: Instance, s: Structure, domains: Sequence[int]
) -> tuple[list[list[int]], IDPool] | None:
    """Clauses whose models are the homomorphisms inside the given domains.

    Returns None when some constraint has no row left inside the domains.
    """
    pool = IDPool()
    clauses: list[list[int]] = []

    def lit(v: int, a: int) -> int:
        return pool.id(("x", v, a))

    for v, mask in enumerate(domains):
        values = list(iter_bits(mask))
        if not values:
            return None
        clauses.extend(_exactly_one([lit(v, a) for a in values], pool))

    cache: dict[tuple[int, tuple[int, ...]], list[tuple[int, ...]]] = {}
    selector = 0
    for index, table in enumerate(x.tables):
        template_rows = s.sorted_rows(index)
        for row in sorted(table):
            scope, pattern = scope_and_pattern(row)
            key = (index, pattern)
            if key not in cache:
                cache[key] = project_rows(template_rows, pattern, len(scope))
            rows = [
                r
                for r in cache[key]
                if all((domains[v] >> a) & 1 for v, a in zip(scope, r, strict=True))
            ]
            if not rows:
                return None
            if len(scope) == 1:
                (v,) = scope
                allowed = {r[0] for r in rows}
                clauses.extend([-lit(v, a)] for a in iter_bits(domains[v]) if a not in allowed)
            elif len(scope) == 2:
                u, w = scope
                for a in iter_bits(domains[u]):
                    clauses.append([-lit(u, a)] + [lit(w, b) for b in sorted({r[1] for r in rows if r[0] == a})])
                for b in iter_bits(domains[w]):
                    clauses.append([-lit(w, b)] + [lit(u, a) for a in sorted({r[0] for r in rows if r[1] == b})])
            else:
                sels = []
                for r in rows:
                    sel = pool.id(("row", selector))
                    selector += 1
                    sels.append(sel)
                    clauses.extend([-sel, lit(v, a)] for v, a in zip(scope, r, strict=True))
                for i, v in enumerate(scope):
                    for a in iter_bits(domains[v]):
                        clauses.append(
                            [-lit(v, a)] + [sel for sel, r in zip(sels, rows, strict=True) if r[i] == a]
                        )
    return clauses, pool


def sat_find_homomorphism(
    x: Instance,
    s: Structure,
    domains: Sequence[int] | None = None,
    seed: Mapping[int, int] | None = None,
    solver_name: str | None = None,
) -> tuple[int, ...] | None:
    """Solve the instance with a CDCL solver.

    Args:
        x: Instance.
        s: Template.
        domains: Optional starting bitmask per variable (e.g. after arc consistency).
        seed: Fixed values for some variables.
        solver_name: python-sat solver name. Defaults to settings.sat_solver.

    Returns:
        Values per variable, or None if unsatisfiable.

    Raises:
        SatSearchError: If the solver cannot be started.
    """
    full = (1 << s.domain_size) - 1
    doms = list(domains) if domains is not None else [full] * x.variable_count
    for v, a in (seed or {}).items():
        doms[v] &= 1 << a
    encoded = encode(x, s, doms)
    if encoded is None:
        return None
    clauses, pool = encoded
    name = solver_name or settings.sat_solver
    logger.debug(
        "sat search over %d variables: %d clauses, %d booleans", x.variable_count, len(clauses), pool.top
    )
    try:
        with Solver(name=name, bootstrap_with=clauses) as solver:
            if not solver.solve():
                return None
            model = {lit for lit in solver.get_model() if lit > 0}
    except Exception as e:
        raise SatSearchError(f"SAT solver '{name}' failed: {e}") from e
    return tuple(
        next(a for a in iter_bits(doms[v]) if pool.id(("x", v, a)) in model)
        for v in range(x.variable_count)
    )
