"""Backtracking homomorphism search with maintained arc consistency.

Domains are Python int bitsets, one per variable. Every constraint is
compiled against the template once: repeated variables in a tuple are
folded into its scope and the template rows are filtered accordingly, so
propagation enforces generalized arc consistency on the true constraint.
"""

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence

from cspalgebra.domain.models import Instance, Structure
from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class RowSet:
    """Template rows projected onto the distinct variables of one constraint shape."""

    __slots__ = ("rows", "mask", "forward", "backward")

    def __init__(self, rows: list[tuple[int, ...]], width: int, domain_size: int) -> None:
        self.rows = rows
        self.mask = 0
        self.forward: list[int] = []
        self.backward: list[int] = []
        if width == 1:
            for (a,) in rows:
                self.mask |= 1 << a
        elif width == 2:
            self.forward = [0] * domain_size
            self.backward = [0] * domain_size
            for a, b in rows:
                self.forward[a] |= 1 << b
                self.backward[b] |= 1 << a


def scope_and_pattern(row: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Distinct variables of a tuple and the slot each position refers to."""
    scope = tuple(dict.fromkeys(row))
    return scope, tuple(scope.index(v) for v in row)


def project_rows(
    rows: Iterable[tuple[int, ...]], pattern: tuple[int, ...], width: int
) -> list[tuple[int, ...]]:
    """Rows consistent with the repetition pattern, read on the distinct slots."""
    kept: set[tuple[int, ...]] = set()
    for row in rows:
        values: list[int | None] = [None] * width
        for value, slot in zip(row, pattern, strict=True):
            if values[slot] is None:
                values[slot] = value
            elif values[slot] != value:
                break
        else:
            kept.add(tuple(values))  # type: ignore[arg-type]
    return sorted(kept)


class HomomorphismSearch:
    """Complete search for homomorphisms from an instance to a template.

    Variables are chosen by minimum remaining values with ties broken on the
    lowest id (or plainly by id with order="index"); values are tried in
    ascending order.
    """

    def __init__(
        self,
        x: Instance,
        s: Structure,
        *,
        order: str | None = None,
        node_cap: int | None = None,
    ) -> None:
        self.domain_size = s.domain_size
        self.variable_count = x.variable_count
        self.full = (1 << s.domain_size) - 1
        self.order = order or settings.variable_order
        self.node_cap = node_cap if node_cap is not None else settings.search_node_cap
        self.nodes = 0
        self._unary = [self.full] * x.variable_count
        self._scopes: list[tuple[int, ...]] = []
        self._rowsets: list[RowSet] = []
        self._watch: list[list[int]] = [[] for _ in range(x.variable_count)]
        self._compile(x, s)

    def _compile(self, x: Instance, s: Structure) -> None:
        cache: dict[tuple[int, tuple[int, ...]], RowSet] = {}
        for index, table in enumerate(x.tables):
            template_rows = s.sorted_rows(index)
            for row in sorted(table):
                scope, pattern = scope_and_pattern(row)
                key = (index, pattern)
                rowset = cache.get(key)
                if rowset is None:
                    rowset = RowSet(
                        project_rows(template_rows, pattern, len(scope)),
                        len(scope),
                        self.domain_size,
                    )
                    cache[key] = rowset
                if len(scope) == 1:
                    self._unary[scope[0]] &= rowset.mask
                    continue
                cid = len(self._scopes)
                self._scopes.append(scope)
                self._rowsets.append(rowset)
                for v in scope:
                    self._watch[v].append(cid)

    @property
    def constraint_count(self) -> int:
        return len(self._scopes)

    def _revise(self, cid: int, domains: list[int]) -> list[int] | None:
        scope = self._scopes[cid]
        rowset = self._rowsets[cid]
        if len(scope) == 2:
            u, v = scope
            du, dv = domains[u], domains[v]
            new_u = new_v = 0
            forward = rowset.forward
            for a in iter_bits(du):
                support = forward[a] & dv
                if support:
                    new_u |= 1 << a
                    new_v |= support
            if not new_u:
                domains[u] = 0
                return None
            changed = []
            if new_u != du:
                domains[u] = new_u
                changed.append(u)
            if new_v != dv:
                domains[v] = new_v
                changed.append(v)
            return changed

        masks = [domains[v] for v in scope]
        supported = [0] * len(scope)
        for row in rowset.rows:
            for m, value in zip(masks, row, strict=True):
                if not (m >> value) & 1:
                    break
            else:
                for i, value in enumerate(row):
                    supported[i] |= 1 << value
        if not supported[0]:
            domains[scope[0]] = 0
            return None
        changed = []
        for v, old, new in zip(scope, masks, supported, strict=True):
            if new != old:
                domains[v] = new
                changed.append(v)
        return changed

    def propagate(self, domains: list[int], changed: Iterable[int] | None = None) -> bool:
        """Enforce arc consistency in place; False on a domain wipe-out."""
        if changed is None:
            queue = deque(range(len(self._scopes)))
        else:
            queue = deque(dict.fromkeys(c for v in changed for c in self._watch[v]))
        queued = set(queue)
        while queue:
            cid = queue.popleft()
            queued.discard(cid)
            result = self._revise(cid, domains)
            if result is None:
                return False
            for v in result:
                for other in self._watch[v]:
                    if other != cid and other not in queued:
                        queued.add(other)
                        queue.append(other)
        return True

    def initial_domains(
        self,
        seed: Mapping[int, int] | None = None,
        restrict: Sequence[int] | None = None,
    ) -> list[int] | None:
        """Arc-consistent starting domains, or None if propagation fails.

        Args:
            seed: Fixed values for some variables.
            restrict: Optional extra bitmask per variable.
        """
        domains = list(self._unary)
        if restrict is not None:
            domains = [a & b for a, b in zip(domains, restrict, strict=True)]
        for v, a in (seed or {}).items():
            domains[v] &= 1 << a
        if any(d == 0 for d in domains):
            return None
        if not self.propagate(domains):
            return None
        return domains

    def _choose(self, domains: list[int], targets: Sequence[int]) -> int | None:
        best = None
        best_size = self.domain_size + 1
        for v in targets:
            size = domains[v].bit_count()
            if size > 1:
                if self.order == "index" or size == 2:
                    return v
                if size < best_size:
                    best, best_size = v, size
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise CapExceededError("search nodes", None, self.node_cap)

    def solutions(
        self, domains: list[int], variables: Iterable[int] | None = None
    ) -> Iterator[list[int]]:
        """Domain states in which every target variable is fixed.

        Branches only on the target variables (all variables by default);
        each yielded state is arc consistent and distinct on the targets.
        """
        targets = (
            list(range(self.variable_count)) if variables is None else sorted(set(variables))
        )
        v = self._choose(domains, targets)
        if v is None:
            yield domains
            return
        stack = [(domains, v, list(reversed(list(iter_bits(domains[v])))))]
        while stack:
            state, var, pending = stack[-1]
            if not pending:
                stack.pop()
                continue
            value = pending.pop()
            child = state.copy()
            child[var] = 1 << value
            self._tick()
            if not self.propagate(child, (var,)):
                continue
            nxt = self._choose(child, targets)
            if nxt is None:
                yield child
                continue
            stack.append((child, nxt, list(reversed(list(iter_bits(child[nxt]))))))

    def first(self, domains: list[int]) -> tuple[int, ...] | None:
        """First complete solution below a state, decoded."""
        state = next(self.solutions(domains), None)
        if state is None:
            return None
        return self.decode(state)

    @staticmethod
    def decode(domains: Sequence[int]) -> tuple[int, ...]:
        return tuple(d.bit_length() - 1 for d in domains)

    def run(self, seed: Mapping[int, int] | None = None) -> tuple[int, ...] | None:
        domains = self.initial_domains(seed)
        result = None if domains is None else self.first(domains)
        logger.debug(
            "search over %d variables, %d constraints: %s after %d nodes",
            self.variable_count,
            self.constraint_count,
            "solved" if result is not None else "no solution",
            self.nodes,
        )
        return result
