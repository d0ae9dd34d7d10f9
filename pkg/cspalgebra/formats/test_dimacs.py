"""Tests for DIMACS and edge-list files."""

import pytest

from cspalgebra.domain.models import CNFInstance, EdgeColoring, Graph, Literal
from cspalgebra.formats import ParseError, emit_dimacs, emit_edge_list, parse_dimacs, parse_edge_list


class TestParseDimacs:
    """Tests for parse_dimacs."""

    def test_basic(self):
        phi = parse_dimacs("c example\np cnf 4 2\n1 -2 3 0\n-1 2\n4 0\n")
        assert phi.variable_count == 4
        assert phi.clauses[0] == (Literal(0), Literal(1, False), Literal(2))
        assert phi.clauses[1] == (Literal(0, False), Literal(1), Literal(3))

    def test_emit_reparses(self):
        phi = CNFInstance.from_signed(3, [[1, 2, -3], [-1, -2, 3]])
        assert parse_dimacs(emit_dimacs(phi)) == phi

    def test_two_literal_clause(self):
        with pytest.raises(ParseError) as info:
            parse_dimacs("p cnf 3 1\n1 2 0\n")
        assert info.value.line == 2

    def test_repeated_variable(self):
        with pytest.raises(ParseError):
            parse_dimacs("p cnf 3 1\n1 -1 2 0\n")

    def test_literal_out_of_range(self):
        with pytest.raises(ParseError) as info:
            parse_dimacs("p cnf 2 1\n1 2 3 0\n")
        assert info.value.column == 5

    def test_bad_literal(self):
        with pytest.raises(ParseError):
            parse_dimacs("p cnf 3 1\n1 x 3 0\n")

    def test_clause_count(self):
        with pytest.raises(ParseError):
            parse_dimacs("p cnf 3 2\n1 2 3 0\n")

    def test_unterminated(self):
        with pytest.raises(ParseError):
            parse_dimacs("p cnf 3 1\n1 2 3\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_dimacs("1 2 3 0\n")


class TestEdgeList:
    """Tests for parse_edge_list and emit_edge_list."""

    def test_parse(self):
        g = parse_edge_list("vertices 4\n0 1\n1 2  # comment\n")
        assert g == Graph(4, ((0, 1), (1, 2)))

    def test_vertex_count_inferred(self):
        assert parse_edge_list("0 3\n").vertex_count == 4

    def test_loop(self):
        with pytest.raises(ParseError):
            parse_edge_list("1 1\n")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1\n1 0\n")

    def test_vertex_outside_declared_range(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list("vertices 2\n0 1\n1 2\n")
        assert info.value.line == 3

    def test_emit_with_coloring(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert emit_edge_list(g, EdgeColoring((0, 2))) == "vertices 3\n0 1 0\n1 2 2\n"
        assert parse_edge_list(emit_edge_list(g)) == g
