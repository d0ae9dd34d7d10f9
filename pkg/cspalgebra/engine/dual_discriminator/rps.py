"""Solver pass for the rock-paper-scissors template.

The template has the graph of the cycle r -> p -> s -> r and the ternary
relation R*(x, y, z): x in {p, s} and (x = s or y = z). After arc
consistency a variable is fixed, critical or free by the size of its
value set. Fixed variables take their value, critical ones the
rock-paper-scissors product of their two values, and free ones are set
along mod-3 offsets: +1 along the cycle graph, 0 between y and z of an
R* constraint whose first variable is fixed to p.
"""

import logging
from itertools import product

import networkx as nx

from cspalgebra.domain.models import Assignment, Instance, Structure
from cspalgebra.engine.consistency import good_witness
from cspalgebra.engine.core.homomorphism import is_homomorphism
from cspalgebra.engine.core.validation import require_same_signature
from cspalgebra.engine.exceptions import InconclusiveError, PreconditionError
from cspalgebra.engine.polymorphism.operations import RPS_TABLE

logger = logging.getLogger(__name__)

ROCK, PAPER, SCISSORS = 0, 1, 2
CYCLE_ROWS = frozenset({(ROCK, PAPER), (PAPER, SCISSORS), (SCISSORS, ROCK)})
STAR_ROWS = frozenset(
    (x, y, z)
    for x, y, z in product(range(3), repeat=3)
    if x in (PAPER, SCISSORS) and (x == SCISSORS or y == z)
)


def rps_relations(s: Structure) -> tuple[str, str] | None:
    """Names of the cycle graph and of R* when s is exactly the rock-paper-scissors template."""
    if s.domain_size != 3 or len(s.signature) != 2:
        return None
    names: dict[str, str] = {}
    for symbol, table in s.items():
        if table == CYCLE_ROWS:
            names["cycle"] = symbol.name
        elif table == STAR_ROWS:
            names["star"] = symbol.name
    if len(names) != 2:
        return None
    return names["cycle"], names["star"]


def rps_solve(x: Instance, s: Structure) -> Assignment | None:
    """Solve an instance of the rock-paper-scissors template.

    Returns:
        A solution, or None when arc consistency fails or the offsets
        around some cycle do not add up.

    Raises:
        PreconditionError: If s is not the rock-paper-scissors template.
        InconclusiveError: If the constructed assignment is not a solution.
    """
    require_same_signature(x, s)
    names = rps_relations(s)
    if names is None:
        raise PreconditionError("template is not the rock-paper-scissors structure")
    cycle, star = names
    witness = good_witness(x, s)
    if witness is None:
        logger.info("arc consistency empties a value set: unsolvable")
        return None
    allowed = [witness.allowed(v) for v in x.variables]

    links = [(u, v, 1) for u, v in x.relation(cycle)]
    links += [(u, v, 0) for z, u, v in x.relation(star) if allowed[z] == (PAPER,)]
    offsets = nx.DiGraph()
    offsets.add_nodes_from(x.variables)
    for u, v, w in links:
        for a, b, weight in ((u, v, w % 3), (v, u, -w % 3)):
            if offsets.has_edge(a, b) and offsets.edges[a, b]["weight"] != weight:
                logger.info("conflicting offsets between %d and %d: unsolvable", a, b)
                return None
            offsets.add_edge(a, b, weight=weight)

    values: list[int] = [ROCK] * x.variable_count
    for component in nx.weakly_connected_components(offsets):
        root = min(component)
        shift = {root: 0}
        for u, v in nx.bfs_edges(offsets, root):
            shift[v] = (shift[u] + offsets.edges[u, v]["weight"]) % 3
        for u, v, w in offsets.subgraph(component).edges(data="weight"):
            if (shift[u] + w - shift[v]) % 3:
                logger.info("offsets around a cycle through %d do not add up: unsolvable", u)
                return None
        for v in component:
            match allowed[v]:
                case (a,):
                    values[v] = a
                case (a, b):
                    values[v] = RPS_TABLE[a][b]
                case _:
                    values[v] = (ROCK + shift[v]) % 3

    counts = [sum(1 for v in x.variables if len(allowed[v]) == k) for k in (1, 2, 3)]
    logger.debug("fixed %d, critical %d, free %d", *counts)
    solution = Assignment(tuple(values))
    if not is_homomorphism(solution, x, s):
        raise InconclusiveError("rock-paper-scissors pass did not produce a solution")
    return solution
