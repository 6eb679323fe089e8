import pytest

from ribbonpoly import (GraphFileError, lens_heegaard_graph, lens_params,
                        parse_graph_file, subgraph_metrics, write_graph_file)
from ribbonpoly.verify import POINCARE_FILES, load_poincare

LOOP_TEXT = "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 untwisted\n"


def test_parse_loop():
    G = parse_graph_file(LOOP_TEXT)
    assert G.vertex_count == 1
    assert G.edges == ((0, 1, False),)
    assert write_graph_file(G) == LOOP_TEXT


def test_comments_and_whitespace():
    text = "# a loop\nribbon 1 1\n\nrot 0:  0   1  # cyclic order\nedge 0: 0 1 untwisted\n"
    G = parse_graph_file(text)
    assert write_graph_file(G) == LOOP_TEXT


def test_count_mismatch():
    with pytest.raises(GraphFileError, match="2 edges but 1"):
        parse_graph_file("ribbon 1 2\nrot 0: 0 1\nedge 0: 0 1 untwisted\n")
    with pytest.raises(GraphFileError, match="1 vertices but 0"):
        parse_graph_file("ribbon 1 0\n")


def test_line_numbers_in_errors():
    bad = "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 maybe\n"
    with pytest.raises(GraphFileError, match="line 3"):
        parse_graph_file(bad)
    with pytest.raises(GraphFileError, match="line 2"):
        parse_graph_file("ribbon 1 1\nrot x: 0 1\nedge 0: 0 1 untwisted\n")


def test_invariant_violation_names_id():
    bad = "ribbon 1 1\nrot 0: 0 0\nedge 0: 0 1 untwisted\n"
    with pytest.raises(GraphFileError, match="half-edge 0"):
        parse_graph_file(bad)


def test_twisted_flag():
    text = "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 twisted\n"
    G = parse_graph_file(text)
    assert G.edges[0][2] is True
    assert write_graph_file(G) == text


def test_round_trip_lens():
    g = lens_heegaard_graph(lens_params(3, 1))
    text = write_graph_file(g)
    assert text.splitlines()[0] == "ribbon 3 6"
    assert parse_graph_file(text) == g
    assert write_graph_file(parse_graph_file(text)) == text


def test_shipped_poincare_files():
    for name in POINCARE_FILES:
        G = load_poincare(name)
        assert G.vertex_count == 12
        assert len(G.edges) == 24
        assert all(len(r) == 4 for r in G.rotations)
        m = subgraph_metrics(G)
        assert (m.k, m.t, m.euler_genus) == (1, 0, 4)
        text = write_graph_file(G)
        assert write_graph_file(parse_graph_file(text)) == text
