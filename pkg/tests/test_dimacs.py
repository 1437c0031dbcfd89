import pytest

from choosability.dimacs import (ParseError, parse_dimacs_cnf, parse_graph,
                                 read_artifact, write_artifact,
                                 write_dimacs_cnf, write_graph)
from choosability.generators import gen_formula, gen_gnp
from choosability.reductions import CnfFormula, constraint_graph_P, triangle_reduction

from conftest import cycle_graph


class TestGraphFormat:
    def test_parse_triangle(self):
        g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert g == cycle_graph(3)

    def test_comments_and_blank_lines(self):
        g = parse_graph("c a triangle\n\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert g.n == 3

    def test_self_loop_error_line(self):
        with pytest.raises(ParseError, match="line 2.*self-loop"):
            parse_graph("p edge 2 1\ne 1 1\n")

    def test_duplicate_edge_error(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_graph("p edge 2 2\ne 1 2\ne 2 1\n")

    def test_out_of_range_error(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_graph("p edge 2 1\ne 1 3\n")

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="promised"):
            parse_graph("p edge 3 2\ne 1 2\n")

    def test_missing_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_graph("e 1 2\n")

    def test_roundtrip_constraint_graph(self):
        g = constraint_graph_P().graph
        text = write_graph(g)
        # labels are not serialized; compare structure
        parsed = parse_graph(text)
        assert parsed.n == g.n and parsed.edges == g.edges
        assert write_graph(parsed) == text

    def test_roundtrip_generated_corpus(self):
        for seed in range(40):
            g = gen_gnp(1 + seed % 17, 0.3, seed=seed)
            assert parse_graph(write_graph(g)) == g


class TestCnfFormat:
    def test_basic(self):
        phi = parse_dimacs_cnf("p cnf 3 1\n1 2 -3 0\n")
        assert phi == CnfFormula(3, [(1, 2, -3)])

    def test_duplicate_literal(self):
        with pytest.raises(ParseError, match="duplicate literal"):
            parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n")

    def test_missing_terminator(self):
        with pytest.raises(ParseError, match="line 2.*not terminated"):
            parse_dimacs_cnf("p cnf 3 1\n1 2 -3\n")

    def test_arity_error(self):
        with pytest.raises(ParseError, match="need exactly 3"):
            parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n")

    def test_out_of_range_literal(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_dimacs_cnf("p cnf 2 1\n1 2 -3 0\n")

    def test_clause_spanning_lines(self):
        phi = parse_dimacs_cnf("p cnf 3 1\n1 2\n-3 0\n")
        assert phi.clauses == ((1, 2, -3),)

    def test_rotation_extension(self):
        text = "p cnf 3 2\nc rot 1 2 3 1\nc rot 2 1 2 3\n1 2 3 0\n-1 -2 -3 0\n"
        phi = parse_dimacs_cnf(text)
        assert phi.rotation == ((2, 3, 1), (1, 2, 3))

    def test_partial_rotation_rejected(self):
        with pytest.raises(ParseError, match="rotation"):
            parse_dimacs_cnf("p cnf 3 2\nc rot 1 2 3 1\n1 2 3 0\n-1 -2 -3 0\n")

    def test_roundtrip(self):
        for seed in range(25):
            phi = gen_formula(4 + seed % 4, 1 + seed % 3, seed=seed)
            assert parse_dimacs_cnf(write_dimacs_cnf(phi)) == phi
        rotated = CnfFormula(3, [(1, -2, 3)], rotation=((3, 1, 2),))
        assert parse_dimacs_cnf(write_dimacs_cnf(rotated)) == rotated


class TestArtifactFiles:
    def test_roundtrip(self, tmp_path):
        art = triangle_reduction(cycle_graph(4))
        base = tmp_path / "artifact"
        write_artifact(art, base)
        loaded = read_artifact(base)
        assert loaded.kind == art.kind
        assert loaded.graph == art.graph
        assert loaded.roles == {v: rec for v, rec in art.roles.items()}
        assert loaded.meta == art.meta
