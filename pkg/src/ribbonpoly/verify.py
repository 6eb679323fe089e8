"""Verification batteries: the shipped Poincare diagrams and the invariant
checks that every release must pass.

Each ``check_*`` function raises on failure and returns a one-line summary
on success.  The CLI's ``verify`` subcommands and the acceptance test
module both run these, so there is a single source of truth for what is
asserted and at which bounds.
"""

from __future__ import annotations

import math
import random
from importlib import resources

from .exactdet import spanning_tree_count
from .graphfile import parse_graph_file, write_graph_file
from .lens import (LensParams, TheoremCheckError,
                   circulant_isomorphic_bruteforce, lens_heegaard_graph,
                   lens_homeomorphic, scan_tau_orbits,
                   square_shape_check, tau, unit_orbits)
from .multipoly import MultiPoly, parse_poly
from .polynomials import (bollobas_riordan, penrose, penrose_eval,
                          penrose_via_medial_states, tutte,
                          tutte_deletion_contraction)
from .ribbon import (boundary_walks, medial_graph, partial_petrial,
                     random_ribbon_graph, subgraph_metrics)

# Penrose polynomial of the minimal (12-vertex) genus-2 Heegaard diagrams
# of the Poincare homology sphere.  Keys are powers of the variable.
REFERENCE_PENROSE_COEFFS = {
    12: 1, 11: -24, 10: 553, 9: -6186, 8: 42664, 7: -193904,
    6: 595168, 5: -1238528, 4: 1718528, 3: -1518592, 2: 770816,
    1: -170496,
}

POINCARE_FILES = ("poincare_a.ribbon", "poincare_b.ribbon")


def reference_penrose() -> MultiPoly:
    return MultiPoly({(0, 0, 0, 0, k): c for k, c in REFERENCE_PENROSE_COEFFS.items()})


def load_poincare(name) -> "RibbonGraph":
    text = resources.files("ribbonpoly.data").joinpath(name).read_text()
    return parse_graph_file(text)


def univariate_display(poly, varname="z") -> str:
    """Single-variable display form: descending powers, no '*' separators.

    The polynomial must use at most one variable; it is printed the way a
    univariate polynomial is written by hand, e.g. ``z^12 - 24z^11 + ... ``.
    """
    if poly.is_zero():
        return "0"
    used = poly.variables()
    if len(used) > 1:
        raise ValueError("display form is for univariate polynomials, got %r" % (used,))
    items = []
    for exps, coeff in poly.sorted_terms():
        k = sum(exps)
        if k == 0:
            body = str(abs(coeff))
        else:
            head = "" if abs(coeff) == 1 else str(abs(coeff))
            body = head + (varname if k == 1 else "%s^%d" % (varname, k))
        items.append((coeff < 0, body))
    out = [("-" if items[0][0] else "") + items[0][1]]
    for neg, body in items[1:]:
        out.append((" - " if neg else " + ") + body)
    return "".join(out)


def check_poincare(workers=None, log=None) -> str:
    """Both shipped diagrams parse, are minimal 12-vertex genus-2 Heegaard
    graphs, and share the reference Penrose polynomial.  Returns the
    polynomial in display form."""
    ref = reference_penrose()
    assert ref.coefficient(L=12) == 1
    assert ref.coefficient(L=1) == -170496
    assert ref.coefficient() == 0
    polys = []
    for name in POINCARE_FILES:
        G = load_poincare(name)
        if G.vertex_count != 12 or len(G.edges) != 24:
            raise TheoremCheckError(
                "%s: expected 12 vertices / 24 edges, got %d / %d"
                % (name, G.vertex_count, len(G.edges)))
        if any(len(rot) != 4 for rot in G.rotations):
            raise TheoremCheckError("%s: not 4-regular" % name)
        m = subgraph_metrics(G)
        if (m.k, m.t, m.euler_genus) != (1, 0, 4):
            raise TheoremCheckError(
                "%s: not a connected orientable genus-2 embedding (%r)"
                % (name, m))
        if log:
            log("%s: 12 vertices, 24 edges, Euler genus 4; summing 2^24 states"
                % name)
        polys.append(penrose(G, workers=workers))
    if polys[0] != polys[1]:
        raise TheoremCheckError(
            "the two shipped Poincare diagrams have different Penrose polynomials")
    if polys[0] != ref:
        raise TheoremCheckError(
            "Penrose polynomial differs from the reference: %s" % polys[0])
    return univariate_display(polys[0])


def check_tau_consistency(p_max=50, log=None) -> str:
    """tau agrees with Tutte(1,1) (p <= 8), with the float product (inside
    tau, p <= 64), and with p*2^(p-1) when q = 1."""
    pairs = 0
    for p in range(3, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            params = LensParams(p, q)
            t = tau(params)
            pairs += 1
            if p <= 8:
                T = tutte(lens_heegaard_graph(params))
                if T.evaluate(x=1, y=1) != t:
                    raise TheoremCheckError(
                        "Tutte(1,1) != tau for (p,q)=(%d,%d)" % (p, q))
            if q == 1 and t != p * 2 ** (p - 1):
                raise TheoremCheckError(
                    "tau(%d,1)=%d differs from p*2^(p-1)" % (p, t))
        if log and p % 10 == 0:
            log("tau consistency: p=%d done" % p)
    return "tau consistent on %d pairs up to p=%d" % (pairs, p_max)


def check_orbit_invariance(p_max=200, log=None) -> str:
    """tau(p,q) = tau(p,q') for q' in the orbit {+-q^+-1} mod p."""
    checked = 0
    for p in range(3, p_max + 1):
        for orbit in unit_orbits(p):
            values = {tau(LensParams(p, q)) for q in orbit}
            if len(values) != 1:
                raise TheoremCheckError(
                    "tau not constant on orbit %r of p=%d" % (orbit, p))
            checked += len(orbit)
        if log and p % 50 == 0:
            log("orbit invariance: p=%d done" % p)
    return "tau orbit-invariant on %d (p,q) pairs up to p=%d" % (checked, p_max)


def check_square_shape(p_max=100, log=None) -> str:
    """tau = p*A^2 for odd p and (lambda/p)*B^2 for even p, with
    lambda = 6-2(-1)^q in {4, 8}."""
    n = 0
    for p in range(3, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            report = square_shape_check(LensParams(p, q))
            n += 1
            if p % 2 == 0 and report.lambda_mid != (8 if q % 2 else 4):
                raise TheoremCheckError(
                    "lambda_mid mismatch at (p,q)=(%d,%d)" % (p, q))
        if log and p % 25 == 0:
            log("square shape: p=%d done" % p)
    return "square shape verified on %d pairs up to p=%d" % (n, p_max)


def check_prime_scan(p_max=200, log=None) -> str:
    """scan_tau_orbits reports zero cross-orbit collisions at prime p."""
    rows, collisions = scan_tau_orbits(p_max)
    prime_collisions = [
        c for c in collisions
        if all(c.p % d for d in range(2, int(math.isqrt(c.p)) + 1)) and c.p >= 2
    ]
    if prime_collisions:
        raise TheoremCheckError(
            "tau collision at prime p: %r" % prime_collisions[:3])
    return ("scan to p=%d: %d orbit rows, %d prime-level collisions"
            % (p_max, len(rows), len(prime_collisions)))


def check_penrose_evaluations(p_max=8, log=None) -> str:
    """P(G;1) = 0, P(G;2) = 2^p, and log2 P(G;2) recovers v(G)."""
    for p in range(3, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            G = lens_heegaard_graph(LensParams(p, q))
            if penrose_eval(G, 1) != 0:
                raise TheoremCheckError("P(G;1) != 0 for (%d,%d)" % (p, q))
            val = penrose_eval(G, 2)
            if val != 2 ** p:
                raise TheoremCheckError(
                    "P(G;2) = %d != 2^%d for (%d,%d)" % (val, p, p, q))
            if val.bit_length() - 1 != G.vertex_count:
                raise TheoremCheckError("log2 P(G;2) fails to recover v(G)")
        if log:
            log("penrose evaluations: p=%d done" % p)
    return "Penrose evaluations verified for 3 <= p <= %d" % p_max


def check_tutte_top_term(p_max=10, log=None) -> str:
    """Top power of y in the Tutte polynomial is y^(p+1), coefficient 1."""
    for p in range(3, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            T = tutte(lens_heegaard_graph(LensParams(p, q)))
            dy = T.degree("y")
            if dy != p + 1 or T.coefficient(y=dy) != 1:
                raise TheoremCheckError(
                    "Tutte top y-term wrong for (%d,%d): deg %d coeff %d"
                    % (p, q, dy, T.coefficient(y=dy)))
        if log:
            log("tutte top term: p=%d done" % p)
    return "Tutte top term y^(p+1) with coefficient 1 for 3 <= p <= %d" % p_max


def check_q1_characterization(p_max=8, log=None) -> str:
    """P is monic with degree > p exactly when q is 1 or p-1."""
    for p in range(3, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            P = penrose(lens_heegaard_graph(LensParams(p, q)))
            d = P.degree("L")
            monic_high = (P.coefficient(L=d) == 1) and d > p
            if monic_high != (q in (1, p - 1)):
                raise TheoremCheckError(
                    "q=1 characterization fails at (%d,%d): deg %d lead %d"
                    % (p, q, d, P.coefficient(L=d)))
        if log:
            log("q=1 characterization: p=%d done" % p)
    return "Penrose q=1 characterization holds for 3 <= p <= %d" % p_max


def check_classification_oracle(p_max=8, log=None) -> str:
    """Brute-force circulant isomorphism agrees with the classification."""
    pairs = 0
    for p in range(3, p_max + 1):
        units = [q for q in range(1, p) if math.gcd(p, q) == 1]
        for qa in units:
            for qb in units:
                a, b = LensParams(p, qa), LensParams(p, qb)
                if circulant_isomorphic_bruteforce(a, b) != lens_homeomorphic(a, b):
                    raise TheoremCheckError(
                        "isomorphism/classification mismatch at p=%d, q=%d,%d"
                        % (p, qa, qb))
                pairs += 1
        if log:
            log("classification oracle: p=%d done" % p)
    return "brute-force isomorphism matches classification on %d pairs" % pairs


def check_br_completeness(p_max=7, log=None) -> str:
    """For fixed p, Bollobas-Riordan polynomials agree exactly on orbits."""
    for p in range(3, p_max + 1):
        units = [q for q in range(1, p) if math.gcd(p, q) == 1]
        polys = {q: bollobas_riordan(lens_heegaard_graph(LensParams(p, q)))
                 for q in units}
        for qa in units:
            for qb in units:
                same_orbit = lens_homeomorphic(LensParams(p, qa), LensParams(p, qb))
                if (polys[qa] == polys[qb]) != same_orbit:
                    raise TheoremCheckError(
                        "BR completeness evidence fails at p=%d, q=%d,%d"
                        % (p, qa, qb))
        if log:
            log("BR completeness: p=%d done" % p)
    return "BR distinguishes exactly the orbits for 3 <= p <= %d" % p_max


def _engine_property_graphs(rng, n_random, max_edges):
    for p in range(3, 7):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield lens_heegaard_graph(LensParams(p, q))
    for _ in range(n_random):
        yield random_ribbon_graph(rng, max_vertices=4,
                                  max_edges=max_edges, connected=False)


def check_engine_properties(n_random=200, max_edges=7, seed=20250809, log=None) -> str:
    """Structural invariants of the ribbon-graph engine.

    Boundary-trace conservation, Euler consistency, monotone component
    count, partial-Petrial involution, medial genus/face identities and
    checkerboard colouring, BR/Tutte and Penrose dual-path agreement, and
    polynomial round-tripping, over generated lens graphs plus randomized
    rotation systems.
    """
    rng = random.Random(seed)
    n = 0
    for G in _engine_property_graphs(rng, n_random, max_edges):
        n += 1
        ne = len(G.edges)
        m = subgraph_metrics(G)
        # boundary-trace conservation: both trace directions together take
        # 2 * sum(deg) side-steps
        walks = boundary_walks(G)
        if 2 * sum(len(w) for w in walks) != 2 * sum(len(r) for r in G.rotations):
            raise TheoremCheckError("boundary-trace conservation fails")
        # Euler consistency on connected orientable graphs
        if m.k == 1 and m.t == 0:
            if m.euler_genus % 2:
                raise TheoremCheckError("odd Euler genus on orientable graph")
            if m.v - m.e + m.f != 2 - m.euler_genus:
                raise TheoremCheckError("Euler formula fails")
        # monotone component count, one edge at a time
        prev = G.vertex_count
        subset = []
        for j in range(ne):
            subset.append(j)
            k = subgraph_metrics(G, subset).k
            if not (k == prev or k == prev - 1):
                raise TheoremCheckError("component count not monotone")
            prev = k
        # empty-subset metrics
        m0 = subgraph_metrics(G, [])
        if (m0.e, m0.k, m0.r, m0.n, m0.f, m0.t, m0.euler_genus) != \
                (0, G.vertex_count, 0, 0, G.vertex_count, 0, 0):
            raise TheoremCheckError("empty subgraph metrics wrong")
        # partial petrial: involution, preserves v,e,k,r,n
        A = [j for j in range(ne) if rng.random() < 0.5]
        GP = partial_petrial(G, A)
        if partial_petrial(GP, A) != G:
            raise TheoremCheckError("partial petrial is not an involution")
        mp = subgraph_metrics(GP)
        if (mp.v, mp.e, mp.k, mp.r, mp.n) != (m.v, m.e, m.k, m.r, m.n):
            raise TheoremCheckError("petrial changed v/e/k/r/n")
        # medial identities on connected graphs with edges
        if m.k == 1 and ne >= 1:
            Gm = medial_graph(G)
            mm = subgraph_metrics(Gm)
            if Gm.vertex_count != ne or len(Gm.edges) != 2 * ne:
                raise TheoremCheckError("medial counts wrong")
            if mm.euler_genus != m.euler_genus:
                raise TheoremCheckError("medial changed Euler genus")
            if mm.f != G.vertex_count + m.f:
                raise TheoremCheckError("medial face-count identity fails")
            _check_checkerboard(G, Gm, m)
    # dual paths and round-trips: random graphs plus the lens graphs that
    # reach the stated bounds (e = 12 for the Tutte routes, e = 10 for the
    # Penrose routes)
    rng2 = random.Random(seed + 1)
    tutte_pool = [random_ribbon_graph(rng2, max_vertices=4, max_edges=6)
                  for _ in range(40)]
    tutte_pool += [lens_heegaard_graph(LensParams(p, q))
                   for p in range(3, 7) for q in range(1, p)
                   if math.gcd(p, q) == 1]
    for G in tutte_pool:
        if tutte(G) != tutte_deletion_contraction(G.vertex_count,
                                                  G.underlying_edges()):
            raise TheoremCheckError("BR/Tutte dual-path mismatch")
        if tutte(G).evaluate(x=1, y=1) != spanning_tree_count(
                G.vertex_count, G.underlying_edges()):
            raise TheoremCheckError("Tutte(1,1) != Matrix-Tree count")
        P = bollobas_riordan(G)
        if parse_poly(str(P)) != P:
            raise TheoremCheckError("polynomial round-trip fails")
        t = write_graph_file(G)
        if write_graph_file(parse_graph_file(t)) != t:
            raise TheoremCheckError("graph file round-trip fails")
    penrose_pool = tutte_pool[:40]
    penrose_pool += [lens_heegaard_graph(LensParams(p, q))
                     for p in range(3, 6) for q in range(1, p)
                     if math.gcd(p, q) == 1]
    for G in penrose_pool:
        if subgraph_metrics(G).k != 1:
            continue
        if penrose(G) != penrose_via_medial_states(G):
            raise TheoremCheckError("Penrose dual-path mismatch")
        if len(G.edges) >= 1 and penrose_eval(G, 1) != 0:
            raise TheoremCheckError("P(G;1) != 0 on a connected graph")
    return "engine properties verified on %d graphs" % n


def _check_checkerboard(G, Gm, m):
    """Faces of the medial 2-colour with class sizes {v(G), f(G)}."""
    walks = boundary_walks(Gm)
    colour = {}
    adj = {}
    # edge -> face incidences from the traversals
    edge_faces = {}
    for fid, walk in enumerate(walks):
        for (h, d) in walk:
            s = Gm.sigma[h] if d == 0 else Gm.sigma_inv[h]
            edge_faces.setdefault(Gm.edge_of[s], []).append(fid)
    for e, fs in edge_faces.items():
        adj.setdefault(fs[0], set()).add(fs[1])
        adj.setdefault(fs[1], set()).add(fs[0])
    # 2-colour by BFS
    for start in range(len(walks)):
        if start in colour:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adj.get(u, ()):
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    raise TheoremCheckError("medial faces not checkerboard")
    sizes = sorted([sum(1 for c in colour.values() if c == 0),
                    sum(1 for c in colour.values() if c == 1)])
    if sizes != sorted([G.vertex_count, m.f]):
        raise TheoremCheckError(
            "checkerboard classes %r != {v, f} = %r"
            % (sizes, sorted([G.vertex_count, m.f])))


QUICK_CHECKS = (
    ("engine properties", lambda log: check_engine_properties(
        n_random=60, max_edges=6, log=log)),
    ("tau consistency", lambda log: check_tau_consistency(p_max=8, log=log)),
    ("orbit invariance", lambda log: check_orbit_invariance(p_max=8, log=log)),
    ("square shape", lambda log: check_square_shape(p_max=8, log=log)),
    ("orbit scan", lambda log: check_prime_scan(p_max=8, log=log)),
    ("penrose evaluations", lambda log: check_penrose_evaluations(p_max=6, log=log)),
    ("tutte top term", lambda log: check_tutte_top_term(p_max=6, log=log)),
    ("q=1 characterization", lambda log: check_q1_characterization(p_max=6, log=log)),
    ("classification oracle", lambda log: check_classification_oracle(p_max=8, log=log)),
    ("BR completeness evidence", lambda log: check_br_completeness(p_max=6, log=log)),
)

FULL_CHECKS = (
    ("engine properties", lambda log: check_engine_properties(
        n_random=200, max_edges=7, log=log)),
    ("tau consistency", lambda log: check_tau_consistency(p_max=50, log=log)),
    ("orbit invariance", lambda log: check_orbit_invariance(p_max=200, log=log)),
    ("square shape", lambda log: check_square_shape(p_max=100, log=log)),
    ("orbit scan", lambda log: check_prime_scan(p_max=200, log=log)),
    ("penrose evaluations", lambda log: check_penrose_evaluations(p_max=8, log=log)),
    ("tutte top term", lambda log: check_tutte_top_term(p_max=10, log=log)),
    ("q=1 characterization", lambda log: check_q1_characterization(p_max=8, log=log)),
    ("classification oracle", lambda log: check_classification_oracle(p_max=8, log=log)),
    ("BR completeness evidence", lambda log: check_br_completeness(p_max=7, log=log)),
    ("poincare reproduction", lambda log: check_poincare(log=log)),
)


def verify_suite(level="quick", log=None, out=None):
    """Run the invariant batteries; returns True when everything passes."""
    checks = QUICK_CHECKS if level == "quick" else FULL_CHECKS
    ok = True
    for name, fn in checks:
        try:
            summary = fn(log)
            line = "ok   %-26s %s" % (name, summary)
        except Exception as exc:  # report and keep going
            ok = False
            line = "FAIL %-26s %s" % (name, exc)
        if out:
            out(line)
    return ok
