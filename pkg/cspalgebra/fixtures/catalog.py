"""Named templates, graphs and formulas used across the library and its tests."""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations, product

from cspalgebra.domain.models import Graph, Structure

EDGE = "E"


def graph_structure(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Structure:
    """Undirected graph as a structure with one symmetric binary relation."""
    rows = set()
    for u, v in edges:
        rows.add((u, v))
        rows.add((v, u))
    return Structure.create(vertex_count, {EDGE: rows}, {EDGE: 2})


def digraph_structure(vertex_count: int, arcs: Iterable[tuple[int, int]]) -> Structure:
    return Structure.create(vertex_count, {EDGE: list(arcs)}, {EDGE: 2})


def from_graph(g: Graph) -> Structure:
    return graph_structure(g.vertex_count, g.edges)


def complete_graph(n: int) -> Structure:
    return graph_structure(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Structure:
    return graph_structure(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Structure:
    return graph_structure(n, [(i, i + 1) for i in range(n - 1)])


def k2() -> Structure:
    return complete_graph(2)


def k3() -> Structure:
    return complete_graph(3)


def c5() -> Structure:
    return cycle_graph(5)


def path3() -> Structure:
    """The path 0-1-2, whose core is K2."""
    return path_graph(3)


def looped_star() -> Structure:
    """A looped centre with three pendant neighbours; its core is the loop."""
    return Structure.create(
        4, {EDGE: [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)]}, {EDGE: 2}
    )


# Elements r, p, s.
ROCK, PAPER, SCISSORS = 0, 1, 2


def directed_cycle(n: int = 3) -> Structure:
    """Directed n-cycle; for n = 3 the arcs p->r, r->s, s->p."""
    if n == 3:
        return digraph_structure(3, [(PAPER, ROCK), (ROCK, SCISSORS), (SCISSORS, PAPER)])
    return digraph_structure(n, [(i, (i + 1) % n) for i in range(n)])


def special_triad() -> Structure:
    """A 33-vertex oriented tree with three arms and no polymorphism of Siggers type."""
    arcs = [
        (0, 1), (1, 2), (2, 3), (4, 3), (4, 5), (5, 6), (7, 6), (8, 7), (9, 8), (10, 9),
        (0, 11), (11, 12), (13, 12), (13, 14), (14, 15), (15, 16), (17, 16), (18, 17),
        (19, 18), (20, 19),
        (0, 21), (21, 22), (22, 23), (24, 23), (25, 24), (25, 26), (26, 27), (27, 28),
        (29, 28), (30, 29), (31, 30), (32, 31),
    ]  # fmt: skip
    return digraph_structure(33, arcs)


def clause_name(k: int, negated: int) -> str:
    return f"D{negated}" if k == 3 else f"C{negated}"


def k_sat(k: int) -> Structure:
    """k-SAT: relation number i is the clause whose first i literals are negated."""
    relations = {}
    for i in range(k + 1):
        relations[clause_name(k, i)] = [
            t
            for t in product((0, 1), repeat=k)
            if any(t[j] == 0 for j in range(i)) or any(t[j] == 1 for j in range(i, k))
        ]
    return Structure.create(2, relations)


def two_sat() -> Structure:
    return k_sat(2)


def three_sat() -> Structure:
    return k_sat(3)


def horn() -> Structure:
    """Constants plus (x and y) -> z."""
    return Structure.create(
        2,
        {
            "U0": [(0,)],
            "U1": [(1,)],
            "H": [t for t in product((0, 1), repeat=3) if not (t[0] and t[1]) or t[2]],
        },
    )


def horn_implication() -> Structure:
    """Constants plus the implication x -> y."""
    return Structure.create(2, {"U0": [(0,)], "U1": [(1,)], "I": [(0, 0), (0, 1), (1, 1)]})


def nae() -> Structure:
    return Structure.create(
        2, {"NAE": [t for t in product((0, 1), repeat=3) if len(set(t)) > 1]}
    )


def affine_f2() -> Structure:
    """Every equation a1 x1 + a2 x2 + a3 x3 = b over the two-element field."""
    relations = {}
    for coefficients in product((0, 1), repeat=3):
        if not any(coefficients):
            continue
        for b in (0, 1):
            name = f"L{''.join(map(str, coefficients))}_{b}"
            relations[name] = [
                t
                for t in product((0, 1), repeat=3)
                if sum(a * x for a, x in zip(coefficients, t, strict=True)) % 2 == b
            ]
    return Structure.create(2, relations)


def rock_paper_scissors() -> Structure:
    """The graph of r->p->s->r and R*(x,y,z): x in {p,s} and (x = s or y = z)."""
    rpi = [(ROCK, PAPER), (PAPER, SCISSORS), (SCISSORS, ROCK)]
    rstar = [
        (x, y, z)
        for x, y, z in product(range(3), repeat=3)
        if x in (PAPER, SCISSORS) and (x == SCISSORS or y == z)
    ]
    return Structure.create(3, {"Rpi": rpi, "Rstar": rstar})


def disjunctions() -> Structure:
    """Three elements with a disjunction, a unary set and a ternary mix of both kinds of binary constraint."""
    return Structure.create(
        3,
        {
            "R": [(x, y) for x, y in product(range(3), repeat=2) if x == 0 or y == 2],
            "U": [(0,), (1,)],
            "T": [(x, y, (x + 1) % 3) for x, y in product(range(3), repeat=2) if x == 1 or y == 0],
        },
    )


def hypergraph_coloring(n: int, k: int) -> Structure:
    """n-colouring of k-uniform hypergraphs: k-ary not-all-equal over n colours."""
    return Structure.create(
        n, {"NAE": [t for t in product(range(n), repeat=k) if len(set(t)) > 1]}
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def k4_graph() -> Graph:
    return Graph(4, tuple(combinations(range(4), 2)))


def triangle_with_pendants() -> Graph:
    return Graph(6, ((0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)))


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    build: Callable[[], Structure]
    description: str
    tags: tuple[str, ...] = ()


CATALOG: dict[str, FixtureEntry] = {
    entry.name: entry
    for entry in (
        FixtureEntry("k2", k2, "complete graph on 2 vertices", ("graph", "bipartite")),
        FixtureEntry("k3", k3, "complete graph on 3 vertices", ("graph",)),
        FixtureEntry("k4", lambda: complete_graph(4), "complete graph on 4 vertices", ("graph",)),
        FixtureEntry("c4", lambda: cycle_graph(4), "4-cycle", ("graph", "bipartite")),
        FixtureEntry("c5", c5, "5-cycle", ("graph",)),
        FixtureEntry("path3", path3, "path 0-1-2", ("graph", "bipartite")),
        FixtureEntry("looped-star", looped_star, "looped centre with pendants", ("graph",)),
        FixtureEntry("directed-3-cycle", directed_cycle, "directed 3-cycle on r,p,s", ("digraph",)),
        FixtureEntry("special-triad", special_triad, "33-vertex intractable oriented tree", ("digraph",)),
        FixtureEntry("2sat", two_sat, "2-SAT clause relations", ("boolean",)),
        FixtureEntry("3sat", three_sat, "3-SAT clause relations", ("boolean",)),
        FixtureEntry("horn", horn, "constants and (x & y) -> z", ("boolean",)),
        FixtureEntry("horn-implication", horn_implication, "constants and x -> y", ("boolean",)),
        FixtureEntry("nae", nae, "ternary not-all-equal on {0,1}", ("boolean",)),
        FixtureEntry("f2-3", affine_f2, "ternary linear equations over the 2-element field", ("boolean",)),
        FixtureEntry("rps", rock_paper_scissors, "rock-paper-scissors relations Rpi and Rstar", ()),
        FixtureEntry("disjunctions", disjunctions, "3-element template preserved by the dual discriminator", ()),
        FixtureEntry("hypergraph-2-3", lambda: hypergraph_coloring(2, 3), "2-colouring of 3-uniform hypergraphs", ()),
        FixtureEntry("hypergraph-3-3", lambda: hypergraph_coloring(3, 3), "3-colouring of 3-uniform hypergraphs", ()),
    )
}


def get_fixture(name: str) -> Structure:
    """Build a catalogue template by name.

    Raises:
        KeyError: If the name is not in the catalogue.
    """
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(f"Unknown fixture '{name}'; known: {', '.join(sorted(CATALOG))}") from None
    return entry.build()
