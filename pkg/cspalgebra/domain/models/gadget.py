"""Graphs, edge-colouring gadgets and CNF formulas."""

from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import product

import networkx as nx

from cspalgebra.domain.exceptions import MalformedCNFError, MalformedGraphError

COLORS = 3


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with edges identified by their position."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[frozenset[int]] = set()
        for u, v in self.edges:
            if u == v:
                raise MalformedGraphError(f"Loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MalformedGraphError(f"Edge ({u},{v}) leaves the vertex range")
            key = frozenset((u, v))
            if key in seen:
                raise MalformedGraphError(f"Duplicate edge ({u},{v})")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident(self) -> list[list[int]]:
        """Edge ids incident to each vertex."""
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            out[u].append(i)
            out[v].append(i)
        return out

    def degrees(self) -> list[int]:
        return [len(edges) for edges in self.incident()]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def without_edge(self, edge: int) -> "Graph":
        return Graph(self.vertex_count, self.edges[:edge] + self.edges[edge + 1 :])


def canonical_pattern(pattern: Sequence[int]) -> tuple[int, ...]:
    """Relabel colours by first occurrence, the representative up to permutation."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel)) for c in pattern)


class BoundaryPredicate(ABC):
    """Colour patterns on a gadget's coding edges that extend to the gadget.

    Predicates are closed under permutations of the colours; patterns are
    produced lazily since their number grows exponentially with the arity.
    """

    arity: int
    description: str = ""

    @abstractmethod
    def admits(self, pattern: Sequence[int]) -> bool:
        """True if the colouring of the coding edges is admissible."""
        ...

    def patterns(self) -> Iterator[tuple[int, ...]]:
        for pattern in product(range(COLORS), repeat=self.arity):
            if self.admits(pattern):
                yield pattern

    def canonical_patterns(self) -> Iterator[tuple[int, ...]]:
        for pattern in self.patterns():
            if canonical_pattern(pattern) == pattern:
                yield pattern


class TablePredicate(BoundaryPredicate):
    """Predicate given by an explicit set of patterns."""

    def __init__(self, table: frozenset[tuple[int, ...]], arity: int, description: str = ""):
        self.table = table
        self.arity = arity
        self.description = description

    def admits(self, pattern: Sequence[int]) -> bool:
        return tuple(pattern) in self.table

    def patterns(self) -> Iterator[tuple[int, ...]]:
        return iter(sorted(self.table))


@dataclass(frozen=True)
class GadgetPart:
    """A sub-gadget placed inside a larger graph.

    edge_map[i] is the host edge carrying edge i of the sub-gadget; a coding
    edge shared by two parts appears in both maps.
    """

    gadget: "Gadget"
    edge_map: tuple[int, ...]
    label: str = ""

    def coding_map(self) -> tuple[int, ...]:
        """Host edge of each coding position."""
        return tuple(self.edge_map[e] for e in self.gadget.coding_edges)


@dataclass(frozen=True)
class Gadget:
    """A graph with designated coding edges and a boundary predicate.

    Every coding edge has exactly one stub endpoint (a degree one vertex)
    through which the gadget is wired to its neighbours. Composite gadgets
    list the parts they were assembled from.
    """

    name: str
    graph: Graph
    coding_edges: tuple[int, ...]
    predicate: BoundaryPredicate
    stubs: frozenset[int] = frozenset()
    parts: tuple[GadgetPart, ...] = ()

    def __post_init__(self) -> None:
        for e in self.coding_edges:
            if not 0 <= e < self.graph.edge_count:
                raise MalformedGraphError(f"Coding edge {e} not in graph")
        if len(self.coding_edges) != self.predicate.arity:
            raise MalformedGraphError("Predicate arity differs from the coding edge count")

    @property
    def internal_vertex_count(self) -> int:
        return self.graph.vertex_count - len(self.stubs)

    @property
    def is_leaf(self) -> bool:
        return not self.parts


@dataclass(frozen=True)
class EdgeColoring:
    """Colour in {0,1,2} for every edge id."""

    colors: tuple[int, ...]

    def __getitem__(self, edge: int) -> int:
        return self.colors[edge]

    def is_proper(self, graph: Graph) -> bool:
        if len(self.colors) != graph.edge_count:
            return False
        for edges in graph.incident():
            seen = [self.colors[e] for e in edges]
            if len(set(seen)) != len(seen):
                return False
        return all(0 <= c < COLORS for c in self.colors)


@dataclass(frozen=True)
class Literal:
    variable: int
    positive: bool = True

    def __str__(self) -> str:
        return f"{'' if self.positive else '~'}v{self.variable}"


@dataclass(frozen=True)
class CNFInstance:
    """A 3-CNF formula; no clause mentions a variable twice."""

    variable_count: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...] = field(default=())

    def __post_init__(self) -> None:
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise MalformedCNFError(f"Clause {i} has {len(clause)} literals, expected 3")
            variables = [lit.variable for lit in clause]
            if len(set(variables)) != 3:
                raise MalformedCNFError(f"Clause {i} repeats a variable")
            if not all(0 <= v < self.variable_count for v in variables):
                raise MalformedCNFError(f"Clause {i} references an undeclared variable")

    @classmethod
    def from_signed(cls, variable_count: int, clauses: Sequence[Sequence[int]]) -> "CNFInstance":
        """Build from DIMACS-style signed 1-based literals."""
        return cls(
            variable_count,
            tuple(
                tuple(Literal(abs(lit) - 1, lit > 0) for lit in clause)  # type: ignore[misc]
                for clause in clauses
            ),
        )

    def occurrences(self) -> list[int]:
        counts = [0] * self.variable_count
        for clause in self.clauses:
            for lit in clause:
                counts[lit.variable] += 1
        return counts

    def satisfied_by(self, values: Sequence[bool]) -> bool:
        return all(
            any(values[lit.variable] == lit.positive for lit in clause) for clause in self.clauses
        )
