"""Incidence multigraphs and solving acyclic instances."""

import logging

import networkx as nx

from cspalgebra.domain.models import Assignment, Instance, Row, Structure, Witness
from cspalgebra.engine.consistency.arc import good_witness
from cspalgebra.engine.core.homomorphism import is_homomorphism
from cspalgebra.engine.exceptions import CyclicInstanceError, VerificationError

logger = logging.getLogger(__name__)

Occurrence = tuple[int, Row]


def incidence_graph(x: Instance) -> nx.MultiGraph:
    """Bipartite multigraph of variables and constraint occurrences.

    Variable nodes are ("v", id); constraint nodes are ("c", relation index, row).
    Every position of a row contributes one edge, so a repeated variable gives
    parallel edges.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(("v", v) for v in x.variables)
    for index, row in x.iter_constraints():
        node = ("c", index, row)
        graph.add_node(node)
        for position, v in enumerate(row):
            graph.add_edge(("v", v), node, key=position)
    return graph


def is_acyclic(x: Instance) -> bool:
    """True iff the incidence multigraph is a forest."""
    graph = incidence_graph(x)
    if graph.number_of_nodes() == 0:
        return True
    return nx.is_forest(graph)


def _supporting_row(
    rows: list[Row], row: Row, position: int, value: int, witness: Witness
) -> Row | None:
    for t in rows:
        if t[position] != value:
            continue
        if all(
            (witness.allowed_mask(v) >> t[q]) & 1 for q, v in enumerate(row) if q != position
        ):
            return t
    return None


def acyclic_solve(x: Instance, s: Structure) -> Assignment | None:
    """Solve an acyclic instance by extending the arc-consistent sets leafward.

    Each component is rooted at its least variable, which takes its least
    allowed value; every constraint is then satisfied by the least template
    row agreeing with the value already placed.

    Raises:
        CyclicInstanceError: If x has a cycle.
    """
    if not is_acyclic(x):
        raise CyclicInstanceError("instance has a cycle")
    witness = good_witness(x, s)
    if witness is None:
        return None

    templates = [s.sorted_rows(i) for i in range(len(s.tables))]
    touching: list[list[Occurrence]] = [[] for _ in x.variables]
    for index, row in x.iter_constraints():
        for v in row:
            touching[v].append((index, row))

    values: list[int | None] = [None] * x.variable_count
    for root in x.variables:
        if values[root] is not None:
            continue
        values[root] = witness.allowed(root)[0]
        stack = [root]
        done: set[Occurrence] = set()
        while stack:
            v = stack.pop()
            for occurrence in touching[v]:
                if occurrence in done:
                    continue
                done.add(occurrence)
                index, row = occurrence
                position = row.index(v)
                t = _supporting_row(templates[index], row, position, values[v], witness)
                if t is None:
                    raise VerificationError(f"no support for constraint {row}")
                for u, a in zip(row, t, strict=True):
                    if values[u] is None:
                        values[u] = a
                        stack.append(u)
    solution = tuple(v for v in values if v is not None)
    if not is_homomorphism(solution, x, s):
        raise VerificationError("acyclic extension is not a solution")
    logger.debug("acyclic solve: %d variables", x.variable_count)
    return Assignment(solution)
