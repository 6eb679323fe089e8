import random

import pytest

from ribbonpoly import (RibbonGraphError, boundary_component_count,
                        boundary_walks, build_ribbon_graph, component_count,
                        is_orientable, medial_graph, partial_petrial,
                        random_ribbon_graph, subgraph_metrics)

LOOP = build_ribbon_graph(1, [(0, 1)], [(0, 1, False)])
TWISTED_LOOP = build_ribbon_graph(1, [(0, 1)], [(0, 1, True)])
# planar theta: the rotation at the second vertex is the reverse cyclic
# order of the first, as for any plane-embedded parallel family
THETA = build_ribbon_graph(2, [(0, 2, 4), (1, 5, 3)],
                           [(0, 1, False), (2, 3, False), (4, 5, False)])
BRIDGE = build_ribbon_graph(2, [(0,), (1,)], [(0, 1, False)])


def test_build_validation_messages():
    with pytest.raises(RibbonGraphError, match="half-edge 0 paired twice"):
        build_ribbon_graph(1, [(0, 1)], [(0, 1, False), (0, 1, False)])
    with pytest.raises(RibbonGraphError, match="more than one rotation"):
        build_ribbon_graph(2, [(0, 1), (1,)], [(0, 1, False)])
    with pytest.raises(RibbonGraphError, match="out of range"):
        build_ribbon_graph(1, [(0, 7)], [(0, 7, False)])
    with pytest.raises(RibbonGraphError, match="appears in no rotation"):
        build_ribbon_graph(1, [(0,)], [(0, 1, False)])


def test_loop_metrics():
    m = subgraph_metrics(LOOP)
    assert (m.e, m.v, m.k, m.r, m.n, m.f, m.t, m.euler_genus) == \
        (1, 1, 1, 0, 1, 2, 0, 0)


def test_twisted_loop_metrics():
    m = subgraph_metrics(TWISTED_LOOP)
    assert (m.f, m.t, m.euler_genus) == (1, 1, 1)


def test_theta_metrics():
    m = subgraph_metrics(THETA)
    assert (m.e, m.v, m.k, m.r, m.n, m.f, m.t, m.euler_genus) == \
        (3, 2, 1, 1, 2, 3, 0, 0)


def test_same_chirality_theta_is_toroidal():
    # with equal cyclic orders at both vertices the theta embeds in the torus
    G = build_ribbon_graph(2, [(0, 2, 4), (1, 3, 5)],
                           [(0, 1, False), (2, 3, False), (4, 5, False)])
    m = subgraph_metrics(G)
    assert (m.f, m.euler_genus) == (1, 2)


def test_empty_subset_metrics():
    m = subgraph_metrics(THETA, [])
    assert (m.e, m.k, m.r, m.n, m.f, m.t, m.euler_genus) == (0, 2, 0, 0, 2, 0, 0)


def test_subset_out_of_range():
    with pytest.raises(IndexError):
        subgraph_metrics(LOOP, [3])


def test_boundary_trace_conservation():
    rng = random.Random(5)
    for _ in range(50):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=8,
                                connected=False)
        walks = boundary_walks(G)
        assert 2 * sum(len(w) for w in walks) == 2 * sum(
            len(r) for r in G.rotations)


def test_partial_petrial_involution_and_preservation():
    rng = random.Random(6)
    for _ in range(50):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=8,
                                connected=False)
        A = [j for j in range(len(G.edges)) if rng.random() < 0.5]
        GP = partial_petrial(G, A)
        assert partial_petrial(GP, A) == G
        m, mp = subgraph_metrics(G), subgraph_metrics(GP)
        assert (m.v, m.e, m.k, m.r, m.n) == (mp.v, mp.e, mp.k, mp.r, mp.n)
    assert partial_petrial(LOOP, []) == LOOP
    assert subgraph_metrics(partial_petrial(LOOP, [0])).t == 1


def test_monotone_component_count():
    rng = random.Random(7)
    for _ in range(30):
        G = random_ribbon_graph(rng, max_vertices=5, max_edges=8,
                                connected=False)
        prev = G.vertex_count
        chosen = []
        for j in range(len(G.edges)):
            chosen.append(j)
            k = component_count(G, chosen)
            assert k in (prev, prev - 1)
            prev = k


def test_medial_loop():
    Gm = medial_graph(LOOP)
    m = subgraph_metrics(Gm)
    assert (Gm.vertex_count, len(Gm.edges), m.f, m.euler_genus) == (1, 2, 3, 0)


def test_medial_theta():
    Gm = medial_graph(THETA)
    m = subgraph_metrics(Gm)
    assert (Gm.vertex_count, len(Gm.edges), m.f, m.euler_genus) == (3, 6, 5, 0)
    assert all(len(rot) == 4 for rot in Gm.rotations)


def test_medial_requires_edges_and_connectivity():
    with pytest.raises(RibbonGraphError):
        medial_graph(build_ribbon_graph(1, [()], []))
    G2 = build_ribbon_graph(2, [(0, 1), (2, 3)],
                            [(0, 1, False), (2, 3, False)])
    with pytest.raises(RibbonGraphError):
        medial_graph(G2)


def test_medial_preserves_genus_randomized():
    rng = random.Random(8)
    for _ in range(60):
        G = random_ribbon_graph(rng, max_vertices=4, max_edges=7)
        m = subgraph_metrics(G)
        Gm = medial_graph(G)
        mm = subgraph_metrics(Gm)
        assert mm.euler_genus == m.euler_genus
        assert mm.f == G.vertex_count + m.f
        assert Gm.vertex_count == len(G.edges)
        assert len(Gm.edges) == 2 * len(G.edges)


def test_orientability_rules():
    assert is_orientable(LOOP)
    assert not is_orientable(TWISTED_LOOP)
    # even twist count around a cycle stays orientable
    G = build_ribbon_graph(2, [(0, 2), (1, 3)],
                           [(0, 1, True), (2, 3, True)])
    assert is_orientable(G)
    m = subgraph_metrics(G)
    assert m.euler_genus % 2 == 0


def test_isolated_vertex_boundary():
    G = build_ribbon_graph(2, [(0, 1), ()], [(0, 1, False)])
    assert boundary_component_count(G) == 3  # loop annulus + isolated disk
    assert subgraph_metrics(G).k == 2


def test_medial_of_lens_graph():
    from ribbonpoly import lens_heegaard_graph, lens_params

    for (p, q) in ((3, 1), (5, 2)):
        G = lens_heegaard_graph(lens_params(p, q))
        Gm = medial_graph(G)
        m = subgraph_metrics(Gm)
        assert (Gm.vertex_count, len(Gm.edges), m.euler_genus) == (2 * p, 4 * p, 2)
