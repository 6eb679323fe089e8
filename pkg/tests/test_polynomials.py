import random

import pytest

from ribbonpoly import (EnumerationCapError, MultiPoly, bollobas_riordan,
                        build_ribbon_graph, lens_heegaard_graph, lens_params,
                        parse_poly, penrose, penrose_eval,
                        penrose_via_medial_states, random_ribbon_graph,
                        spanning_tree_count, tutte,
                        tutte_deletion_contraction)
from ribbonpoly import statesums

LOOP = build_ribbon_graph(1, [(0, 1)], [(0, 1, False)])
TWISTED_LOOP = build_ribbon_graph(1, [(0, 1)], [(0, 1, True)])
BRIDGE = build_ribbon_graph(2, [(0,), (1,)], [(0, 1, False)])
VERTEX = build_ribbon_graph(1, [()], [])


def test_bollobas_riordan_small():
    assert str(bollobas_riordan(LOOP)) == "y + 1"
    assert str(bollobas_riordan(TWISTED_LOOP)) == "y*z*w + 1"
    assert str(bollobas_riordan(BRIDGE)) == "x"


def test_tutte_small():
    assert str(tutte(LOOP)) == "y"
    assert str(tutte(BRIDGE)) == "x"


def test_tutte_lens_at_11_matches_matrix_tree():
    g = lens_heegaard_graph(lens_params(3, 1))
    assert tutte(g).evaluate(x=1, y=1) == 12
    g = lens_heegaard_graph(lens_params(5, 2))
    count = spanning_tree_count(g.vertex_count, g.underlying_edges())
    assert tutte(g).evaluate(x=1, y=1) == count
    assert tutte_deletion_contraction(
        g.vertex_count, g.underlying_edges()).evaluate(x=1, y=1) == count


def test_deletion_contraction_textbook():
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    assert tutte_deletion_contraction(3, [(0, 1), (1, 2), (2, 0)]) == \
        x ** 2 + x + y
    assert tutte_deletion_contraction(2, [(0, 1), (0, 1)]) == x + y
    assert tutte_deletion_contraction(1, [(0, 0)]) == y
    assert tutte_deletion_contraction(2, [(0, 1)]) == x


def test_br_tutte_dual_path_randomized():
    rng = random.Random(11)
    for _ in range(60):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=6,
                                connected=False)
        assert tutte(G) == tutte_deletion_contraction(
            G.vertex_count, G.underlying_edges())


def test_penrose_small():
    assert str(penrose(VERTEX)) == "L"
    assert penrose_eval(VERTEX, 1) == 1
    L = MultiPoly.variable("L")
    assert penrose(LOOP) == L ** 2 - L
    assert penrose(TWISTED_LOOP) == L - L ** 2


def test_penrose_lens_evaluations():
    g31 = lens_heegaard_graph(lens_params(3, 1))
    assert penrose(g31).evaluate(L=2) == 8
    assert penrose_eval(g31, 1) == 0
    g41 = lens_heegaard_graph(lens_params(4, 1))
    assert penrose_eval(g41, 2) == 16


def test_penrose_requires_connected():
    G2 = build_ribbon_graph(2, [(0, 1), (2, 3)],
                            [(0, 1, False), (2, 3, False)])
    with pytest.raises(ValueError):
        penrose(G2)


def test_penrose_dual_path_randomized():
    rng = random.Random(12)
    for _ in range(60):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=7)
        assert penrose(G) == penrose_via_medial_states(G)


def test_penrose_at_two_counts_vertices_of_4_regular():
    # medials are 4-regular; in an orientable surface P(.;2) = 2^vertices
    from ribbonpoly import medial_graph

    rng = random.Random(14)
    done = 0
    while done < 20:
        G = random_ribbon_graph(rng, max_vertices=3, max_edges=5,
                                twist_prob=0.0)
        Gm = medial_graph(G)
        assert penrose_eval(Gm, 2) == 2 ** Gm.vertex_count
        assert penrose_eval(Gm, 1) == 0
        done += 1


def test_penrose_kernel_matches_reference():
    try:
        from ribbonpoly import _kernels
    except ImportError:
        pytest.skip("compiled kernels unavailable")
    rng = random.Random(13)
    for _ in range(10):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=7,
                                connected=False)
        assert _kernels.penrose_histogram(G) == statesums.penrose_histogram(G)
        assert _kernels.br_histogram(G) == statesums.br_histogram(G)


def test_enumeration_cap():
    g = lens_heegaard_graph(lens_params(5, 2))  # 10 edges
    with pytest.raises(EnumerationCapError, match="cap"):
        bollobas_riordan(g, cap=8)
    with pytest.raises(EnumerationCapError):
        penrose(g, cap=8)
    with pytest.raises(EnumerationCapError):
        tutte_deletion_contraction(1, [(0, 0)] * 9, cap=8)


def test_polynomial_text_round_trip():
    g = lens_heegaard_graph(lens_params(5, 2))
    R = bollobas_riordan(g)
    assert parse_poly(str(R)) == R


def test_penrose_states_enumeration():
    from ribbonpoly import MultiPoly, penrose_states

    G = lens_heegaard_graph(lens_params(3, 1))
    total = MultiPoly.zero()
    states = list(penrose_states(G))
    assert len(states) == 2 ** len(G.edges)
    assert states[0].crossing_set == frozenset() and states[0].cr == 0
    L = MultiPoly.variable("L")
    for s in states:
        total = total + MultiPoly.constant((-1) ** s.cr) * L ** s.c
    assert total == penrose(G)
