import math

import pytest

from ribbonpoly import (LensParams, TheoremCheckError,
                        circulant_isomorphic_bruteforce, lens_heegaard_graph,
                        lens_homeomorphic, lens_params, q_orbit,
                        scan_rows_to_csv, scan_tau_orbits, spanning_tree_count,
                        square_shape_check, subgraph_metrics, tau)
from ribbonpoly.lens import _tau_modular


def test_params_validation():
    with pytest.raises(ValueError):
        lens_params(4, 2)   # gcd 2
    with pytest.raises(ValueError):
        lens_params(2, 1)   # p too small
    assert lens_params(5, 7).q == 2   # reduced mod p
    assert lens_params(5, -1).q == 4


def test_lens_graph_structure():
    g = lens_heegaard_graph(lens_params(3, 1))
    m = subgraph_metrics(g)
    assert (g.vertex_count, len(g.edges), m.f, m.euler_genus, m.k, m.t) == \
        (3, 6, 3, 2, 1, 0)
    # underlying graph is C_3 with all edges doubled
    pairs = sorted(tuple(sorted(e)) for e in g.underlying_edges())
    assert pairs == [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)]

    g = lens_heegaard_graph(lens_params(5, 2))
    m = subgraph_metrics(g)
    assert (g.vertex_count, len(g.edges), m.f, m.euler_genus) == (5, 10, 5, 2)
    assert all(len(r) == 4 for r in g.rotations)


def test_q_orbit():
    assert q_orbit(lens_params(7, 2)).members == (2, 3, 4, 5)
    assert q_orbit(lens_params(5, 2)).members == (2, 3)
    for p in (5, 7, 9, 11):
        assert q_orbit(lens_params(p, 1)).members == (1, p - 1)


def test_lens_homeomorphic():
    assert lens_homeomorphic(lens_params(5, 2), lens_params(5, 3))
    assert not lens_homeomorphic(lens_params(7, 1), lens_params(7, 2))
    assert not lens_homeomorphic(lens_params(5, 2), lens_params(7, 2))


def test_tau_values():
    assert tau(lens_params(3, 1)) == 12
    assert tau(lens_params(5, 1)) == 80
    for p in range(3, 20):
        assert tau(lens_params(p, 1)) == p * 2 ** (p - 1)
    # orbit invariance on a sample
    for (p, q) in ((7, 2), (11, 3), (13, 5), (20, 3)):
        t = tau(lens_params(p, q))
        for q2 in q_orbit(lens_params(p, q)).members:
            assert tau(lens_params(p, q2)) == t


def test_tau_bound():
    with pytest.raises(ValueError):
        tau(lens_params(500, 1))


def test_tau_modular_matches_determinant():
    for p in (10, 30, 63, 64, 65, 90):
        for q in [q for q in range(1, p) if math.gcd(p, q) == 1][:3]:
            qq = lens_params(p, q).q
            ends = [(i, (i + 1) % p) for i in range(p)]
            ends += [(i, (i + qq) % p) for i in range(p)]
            assert _tau_modular(p, qq) == spanning_tree_count(p, ends)


def test_square_shape_examples():
    r = square_shape_check(lens_params(5, 1))
    assert (r.odd_p, r.root, r.tau) == (True, 4, 80)
    r = square_shape_check(lens_params(4, 1))
    assert (r.odd_p, r.lambda_mid, r.root) == (False, 8, 4)
    r = square_shape_check(lens_params(6, 1))
    assert r.lambda_mid == 8  # q odd
    r = square_shape_check(lens_params(8, 3))
    assert r.lambda_mid == 8
    r = square_shape_check(lens_params(10, 3))
    assert r.lambda_mid == 8


def test_circulant_isomorphism_bruteforce():
    assert circulant_isomorphic_bruteforce(lens_params(7, 2), lens_params(7, 4))
    assert not circulant_isomorphic_bruteforce(lens_params(7, 1), lens_params(7, 2))
    assert circulant_isomorphic_bruteforce(lens_params(5, 1), lens_params(5, 1))
    with pytest.raises(ValueError):
        circulant_isomorphic_bruteforce(lens_params(11, 1), lens_params(11, 2))


def test_scan_rows():
    rows, collisions = scan_tau_orbits(7)
    key = [(r.p, r.orbit_rep) for r in rows]
    assert key == [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (7, 1), (7, 2)]
    csv = scan_rows_to_csv(rows)
    lines = csv.splitlines()
    assert lines[0] == "p,orbit_rep,orbit,tau"
    assert lines[1] == "3,1,{1|2},12"
    assert lines[3] == "5,1,{1|4},80"
    # no prime-level collisions at this tiny bound
    assert not collisions


def test_scan_bounds():
    with pytest.raises(ValueError):
        scan_tau_orbits(2)
    with pytest.raises(ValueError):
        scan_tau_orbits(10 ** 6)
