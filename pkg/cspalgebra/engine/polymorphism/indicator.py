"""The indicator instance of a template and an identity system.

Each function symbol f of arity n contributes one raw variable per tuple in
D^n. The equations of the system merge raw variables into classes; every
relation R of the template then contributes the constraints of R^(D^n) on
the classes. Solutions are exactly the operation tuples satisfying the
identities and preserving every relation.

The search never builds the whole instance: constraints stay in numpy
arrays, are split into connected components and each component is solved
on its own.
"""

import logging
from dataclasses import dataclass

import numpy as np

from cspalgebra.domain.models import IdentitySystem, Instance, Operation, Structure
from cspalgebra.engine.core.products import power_table, row_selections
from cspalgebra.engine.core.sat import sat_find_homomorphism
from cspalgebra.engine.core.search import HomomorphismSearch
from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.engine.polymorphism.preservation import relation_rows
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


def component_labels(n: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Least vertex of the connected component of each of n vertices.

    Hooks every root under the least label seen across an edge, then
    compresses pointer chains, until no edge joins two labels.
    """
    labels = np.arange(n, dtype=np.int64)
    if u.size == 0:
        return labels
    while True:
        lu, lv = labels[u], labels[v]
        low = np.minimum(lu, lv)
        hooked = labels.copy()
        np.minimum.at(hooked, lu, low)
        np.minimum.at(hooked, lv, low)
        while True:
            jumped = hooked[hooked]
            if np.array_equal(jumped, hooked):
                break
            hooked = jumped
        if np.array_equal(hooked, labels):
            return labels
        labels = hooked


@dataclass(frozen=True, eq=False)
class IndicatorLayout:
    """Raw variable numbering and identity classes of an indicator instance.

    Attributes:
        domain_size: Template domain size.
        symbols: (name, arity) per function symbol.
        offsets: First raw variable of each symbol.
        classes: Instance variable of every raw variable.
        class_count: Number of instance variables.
    """

    domain_size: int
    symbols: tuple[tuple[str, int], ...]
    offsets: tuple[int, ...]
    classes: np.ndarray
    class_count: int

    @property
    def raw_count(self) -> int:
        return int(self.classes.shape[0])

    def variable(self, symbol: str, args: tuple[int, ...]) -> int:
        """Instance variable holding the value of symbol(args)."""
        i = [name for name, _ in self.symbols].index(symbol)
        code = 0
        for a in args:
            code = code * self.domain_size + a
        return int(self.classes[self.offsets[i] + code])

    def decode(self, values: np.ndarray) -> dict[str, Operation]:
        """Operation tables from instance-variable values."""
        raw = np.asarray(values, dtype=np.int64)[self.classes]
        d = self.domain_size
        return {
            name: Operation(d, arity, raw[offset : offset + d**arity])
            for (name, arity), offset in zip(self.symbols, self.offsets, strict=True)
        }


def _term_codes(
    offset: int, domain_size: int, args: tuple[str, ...], position: dict[str, int], grid: np.ndarray
) -> np.ndarray:
    """Raw variable of the term for every valuation of the abstract variables."""
    columns = grid[[position[a] for a in args]]
    return offset + np.ravel_multi_index(tuple(columns), (domain_size,) * len(args))


def build_layout(s: Structure, ids: IdentitySystem, cap: int | None = None) -> IndicatorLayout:
    """Number raw variables and merge them along the identities.

    Raises:
        CapExceededError: If the raw variable count exceeds the cap.
    """
    cap = cap if cap is not None else settings.indicator_cap
    d = s.domain_size
    offsets = []
    total = 0
    for _, arity in ids.symbols:
        offsets.append(total)
        total += d**arity
        if total > cap:
            raise CapExceededError("indicator variables", sum(d**a for _, a in ids.symbols), cap)
    by_name = {name: offset for (name, _), offset in zip(ids.symbols, offsets, strict=True)}

    left_parts, right_parts = [], []
    for equation in ids.equations:
        names = ids.abstract_variables(equation)
        if d ** len(names) > cap:
            raise CapExceededError("identity instances", d ** len(names), cap)
        grid = row_selections(d, len(names))
        position = {name: i for i, name in enumerate(names)}
        left, right = (_term_codes(by_name[t.symbol], d, t.args, position, grid) for t in equation)
        left_parts.append(left)
        right_parts.append(right)
    u = np.concatenate(left_parts) if left_parts else np.zeros(0, dtype=np.int64)
    v = np.concatenate(right_parts) if right_parts else np.zeros(0, dtype=np.int64)
    labels = component_labels(total, u, v)
    _, classes = np.unique(labels, return_inverse=True)
    class_count = int(classes.max()) + 1 if total else 0
    logger.debug("indicator %s: %d raw variables, %d classes", ids.name, total, class_count)
    return IndicatorLayout(d, ids.symbols, tuple(offsets), classes.astype(np.int64), class_count)


def indicator_constraints(
    s: Structure, layout: IndicatorLayout, cap: int | None = None
) -> list[np.ndarray]:
    """Constraint tuples per relation of s, as (rows, arity) arrays of class ids.

    Raises:
        CapExceededError: If the constraint count exceeds the cap.
    """
    cap = cap if cap is not None else settings.indicator_cap
    d = s.domain_size
    count = sum(
        len(table) ** arity for _, arity in layout.symbols for table in s.tables
    )
    if count > cap:
        raise CapExceededError("indicator constraints", count, cap)
    out = []
    for index, symbol in enumerate(s.signature):
        rows = relation_rows(s, index)
        parts = [
            layout.classes[offset + power_table(rows, d, arity)]
            for (_, arity), offset in zip(layout.symbols, layout.offsets, strict=True)
        ]
        merged = np.concatenate(parts) if parts else np.zeros((0, symbol.arity), dtype=np.int64)
        out.append(np.unique(merged, axis=0) if merged.shape[0] else merged)
    return out


def indicator_instance(
    s: Structure, ids: IdentitySystem, cap: int | None = None
) -> tuple[Instance, IndicatorLayout]:
    """The indicator instance, materialized, with its variable decoding."""
    layout = build_layout(s, ids, cap)
    constraints = indicator_constraints(s, layout, cap)
    tables = tuple(frozenset(tuple(row) for row in arr.tolist()) for arr in constraints)
    return Instance(layout.class_count, s.signature, tables), layout


def _solve_component(sub: Instance, s: Structure) -> tuple[int, ...] | None:
    if sub.variable_count <= settings.native_component_limit:
        return HomomorphismSearch(sub, s).run()
    search = HomomorphismSearch(sub, s)
    domains = search.initial_domains()
    if domains is None:
        return None
    logger.debug("indicator component of %d variables sent to SAT", sub.variable_count)
    return sat_find_homomorphism(sub, s, domains)


def solve_indicator(
    s: Structure, layout: IndicatorLayout, constraints: list[np.ndarray]
) -> np.ndarray | None:
    """Values for every class, or None if some component is unsolvable.

    Components containing a unary constraint go first, then by size.
    Classes outside every constraint take the value 0.

    Raises:
        CapExceededError: If a component exceeds settings.component_cap.
    """
    n = layout.class_count
    us, vs = [], []
    for arr in constraints:
        for j in range(1, arr.shape[1]):
            us.append(arr[:, 0])
            vs.append(arr[:, j])
    u = np.concatenate(us) if us else np.zeros(0, dtype=np.int64)
    v = np.concatenate(vs) if vs else np.zeros(0, dtype=np.int64)
    _, component = np.unique(component_labels(n, u, v), return_inverse=True)
    component = component.astype(np.int64)
    count = int(component.max()) + 1 if n else 0
    sizes = np.bincount(component, minlength=count)

    constrained = np.zeros(count, dtype=bool)
    anchored = np.zeros(count, dtype=bool)
    row_component = []
    for arr in constraints:
        rc = component[arr[:, 0]] if arr.shape[0] else np.zeros(0, dtype=np.int64)
        row_component.append(rc)
        constrained[rc] = True
        if arr.shape[1] == 1:
            anchored[rc] = True

    members_order = np.argsort(component, kind="stable")
    member_starts = np.concatenate(([0], np.cumsum(sizes)))
    row_orders = [np.argsort(rc, kind="stable") for rc in row_component]
    row_starts = [
        np.searchsorted(rc[order], np.arange(count + 1))
        for rc, order in zip(row_component, row_orders, strict=True)
    ]

    todo = sorted(np.flatnonzero(constrained).tolist(), key=lambda c: (not anchored[c], sizes[c], c))
    values = np.zeros(n, dtype=np.int64)
    logger.debug("indicator search: %d classes in %d constrained components", n, len(todo))
    for c in todo:
        if sizes[c] > settings.component_cap:
            raise CapExceededError("indicator component", int(sizes[c]), settings.component_cap)
        members = members_order[member_starts[c] : member_starts[c + 1]]
        tables = []
        for arr, order, starts in zip(constraints, row_orders, row_starts, strict=True):
            rows = arr[order[starts[c] : starts[c + 1]]]
            local = np.searchsorted(members, rows)
            tables.append(frozenset(tuple(r) for r in local.tolist()))
        sub = Instance(int(members.shape[0]), s.signature, tuple(tables))
        solution = _solve_component(sub, s)
        if solution is None:
            logger.debug("indicator component %d of %d classes unsolvable", c, sizes[c])
            return None
        values[members] = solution
    return values
