"""Edge lists for graphs and their edge colourings.

    vertices 6
    0 1
    1 2

Colourings add a third column with the colour of each edge.
"""

from cspalgebra.domain.exceptions import MalformedGraphError
from cspalgebra.domain.models import EdgeColoring, Graph
from cspalgebra.formats.exceptions import ParseError


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    """Parse an edge list; without a 'vertices' line the count is one past the largest vertex.

    Raises:
        ParseError: On malformed lines, loops or duplicate edges.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        if parts[0] == "vertices":
            if declared is not None or edges or len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected one leading 'vertices N' line", lineno, 1, source)
            declared = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("expected two vertex numbers", lineno, 1, source)
        u, v = int(parts[0]), int(parts[1])
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} outside 0..{declared - 1}", lineno, 1, source)
        edges.append((u, v))
    count = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph(count, tuple(edges))
    except MalformedGraphError as e:
        raise ParseError(str(e), 1, 1, source) from e


def emit_edge_list(g: Graph, coloring: EdgeColoring | None = None) -> str:
    lines = [f"vertices {g.vertex_count}"]
    for i, (u, v) in enumerate(g.edges):
        lines.append(f"{u} {v}" if coloring is None else f"{u} {v} {coloring[i]}")
    return "\n".join(lines) + "\n"
