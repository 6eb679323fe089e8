"""Cellularly embedded graphs as signed rotation systems.

A graph embedded in a (possibly nonorientable) closed surface is stored as
a rotation system with twists: every vertex carries the clockwise cyclic
order of its incident half-edges, and every edge pairs two half-edges and
carries a twist bit.  Half-edge identifiers are 0 .. 2e-1, each appearing
exactly once across all rotations and exactly once across all edge records.

Boundary walks are traced on edge sides: from a side of a half-edge, advance
to the rotation successor at the current vertex, then traverse that edge,
crossing to the other side when the edge is twisted.  Faces of the embedding
are the boundary walks of the full edge set.
"""

from __future__ import annotations

from dataclasses import dataclass


class RibbonGraphError(ValueError):
    """Raised when data does not describe a valid signed rotation system."""


class RibbonGraph:
    """Immutable embedded graph: rotations plus twisted edge pairing.

    Use :func:`build_ribbon_graph` to construct with full validation.
    """

    __slots__ = (
        "vertex_count", "rotations", "edges",
        "sigma", "sigma_inv", "theta", "edge_of", "vertex_of", "twist",
        "__weakref__",
    )

    def __init__(self, vertex_count, rotations, edges):
        self.vertex_count = int(vertex_count)
        self.rotations = tuple(tuple(int(h) for h in rot) for rot in rotations)
        self.edges = tuple((int(a), int(b), bool(t)) for (a, b, t) in edges)
        n = 2 * len(self.edges)
        sigma = [-1] * n
        sigma_inv = [-1] * n
        vertex_of = [-1] * n
        for v, rot in enumerate(self.rotations):
            d = len(rot)
            for i, h in enumerate(rot):
                sigma[h] = rot[(i + 1) % d]
                sigma_inv[h] = rot[(i - 1) % d]
                vertex_of[h] = v
        theta = [-1] * n
        edge_of = [-1] * n
        twist = [False] * n
        for j, (a, b, t) in enumerate(self.edges):
            theta[a] = b
            theta[b] = a
            edge_of[a] = edge_of[b] = j
            twist[a] = twist[b] = t
        self.sigma = sigma
        self.sigma_inv = sigma_inv
        self.theta = theta
        self.edge_of = edge_of
        self.vertex_of = vertex_of
        self.twist = twist

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def half_edge_count(self):
        return 2 * len(self.edges)

    def degree(self, v):
        return len(self.rotations[v])

    def endpoints(self, j):
        a, b, _ = self.edges[j]
        return self.vertex_of[a], self.vertex_of[b]

    def underlying_edges(self):
        """Endpoint pairs of the abstract multigraph, in edge order."""
        return [self.endpoints(j) for j in range(len(self.edges))]

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.rotations == other.rotations
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertex_count, self.rotations, self.edges))

    def __repr__(self):
        return "RibbonGraph(v=%d, e=%d)" % (self.vertex_count, len(self.edges))


@dataclass(frozen=True)
class SubgraphMetrics:
    """Topological metrics of a spanning ribbon subgraph.

    euler_genus = 2k - v + e - f; it is even whenever the subgraph is
    orientable (t = 0), and equals twice the orientable genus in that case.
    """

    e: int
    v: int
    k: int
    r: int
    n: int
    f: int
    t: int
    euler_genus: int


def build_ribbon_graph(vertex_count, rotations, edges) -> RibbonGraph:
    """Validate raw rotation and edge lists and return a RibbonGraph.

    Rejects half-edge ids out of range, ids missing from or repeated in the
    rotations, and ids missing from or repeated in the edge records; the
    error message names the offending id.
    """
    vertex_count = int(vertex_count)
    if vertex_count < 0:
        raise RibbonGraphError("vertex count must be >= 0")
    rotations = [tuple(int(h) for h in rot) for rot in rotations]
    edges = [(int(a), int(b), bool(t)) for (a, b, t) in edges]
    if len(rotations) != vertex_count:
        raise RibbonGraphError(
            "expected %d rotations, got %d" % (vertex_count, len(rotations)))
    n = 2 * len(edges)
    seen_rot = {}
    for v, rot in enumerate(rotations):
        for h in rot:
            if h < 0 or h >= n:
                raise RibbonGraphError(
                    "half-edge %d out of range 0..%d" % (h, n - 1))
            if h in seen_rot:
                raise RibbonGraphError(
                    "half-edge %d appears in more than one rotation position" % h)
            seen_rot[h] = v
    seen_edge = set()
    for a, b, _t in edges:
        for h in (a, b):
            if h < 0 or h >= n:
                raise RibbonGraphError(
                    "half-edge %d out of range 0..%d" % (h, n - 1))
            if h in seen_edge:
                raise RibbonGraphError("half-edge %d paired twice" % h)
            seen_edge.add(h)
    if len(seen_rot) != n:
        missing = min(h for h in range(n) if h not in seen_rot)
        raise RibbonGraphError("half-edge %d appears in no rotation" % missing)
    return RibbonGraph(vertex_count, rotations, edges)


def _check_subset(G, subset):
    edge_set = frozenset(int(j) for j in subset)
    for j in edge_set:
        if j < 0 or j >= len(G.edges):
            raise IndexError("edge index %d out of range" % j)
    return edge_set


def boundary_walks(G, subset=None, twist_toggle=frozenset()):
    """Boundary walks of the spanning subgraph on ``subset``.

    Each walk is a list of (half-edge, side) steps; one walk per boundary
    component of the ribbon subgraph, excluding isolated vertices (an
    isolated vertex contributes one circular boundary with no steps).
    Edges listed in ``twist_toggle`` have their twist bit flipped for the
    trace, which is how partial-Petrial boundaries are computed without
    rebuilding the graph.
    """
    ne = len(G.edges)
    present = frozenset(range(ne)) if subset is None else _check_subset(G, subset)
    toggle = _check_subset(G, twist_toggle)
    sigma, sigma_inv = G.sigma, G.sigma_inv
    theta, edge_of, twist = G.theta, G.edge_of, G.twist

    def succ(h, forward):
        s = sigma[h] if forward else sigma_inv[h]
        while edge_of[s] not in present:
            s = sigma[s] if forward else sigma_inv[s]
        return s

    walks = []
    seen = set()
    for h0 in range(2 * ne):
        if edge_of[h0] not in present:
            continue
        for d0 in (0, 1):
            if (h0, d0) in seen:
                continue
            walk = []
            h, d = h0, d0
            while (h, d) not in seen:
                seen.add((h, d))
                walk.append((h, d))
                s = succ(h, forward=(d == 0))
                flip = twist[s] ^ (edge_of[s] in toggle)
                h, d = theta[s], d ^ (1 if flip else 0)
            walks.append(walk)
            # Mark the reverse traversal of the same boundary circle as seen:
            # the reversal of flag (h, 0) is (succ(h), 1) and of (h, 1) is
            # (pred(h), 0).  The two traversals are always distinct cycles
            # (they are the two components of the orientation double cover
            # of the circle).
            for (h, d) in walk:
                rev = (succ(h, forward=True), 1) if d == 0 \
                    else (succ(h, forward=False), 0)
                seen.add(rev)
    return walks


def boundary_component_count(G, subset=None, twist_toggle=frozenset()):
    """f of the spanning ribbon subgraph, isolated vertices included."""
    ne = len(G.edges)
    present = frozenset(range(ne)) if subset is None else _check_subset(G, subset)
    walks = boundary_walks(G, present, twist_toggle)
    isolated = 0
    for rot in G.rotations:
        if all(G.edge_of[h] not in present for h in rot):
            isolated += 1
    return len(walks) + isolated


def component_count(G, subset=None):
    """k of the spanning subgraph (isolated vertices are components)."""
    ne = len(G.edges)
    present = range(ne) if subset is None else _check_subset(G, subset)
    parent = list(range(G.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in present:
        a, b, _t = G.edges[j]
        ra, rb = find(G.vertex_of[a]), find(G.vertex_of[b])
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(G.vertex_count)})


def is_orientable(G, subset=None, twist_toggle=frozenset()):
    """Whether the spanning ribbon subgraph admits a consistent orientation.

    A twisted edge flips local orientation, an untwisted one preserves it;
    the subgraph is nonorientable exactly when some cycle accumulates a flip.
    """
    ne = len(G.edges)
    present = range(ne) if subset is None else _check_subset(G, subset)
    toggle = _check_subset(G, twist_toggle)
    parent = list(range(G.vertex_count))
    parity = [0] * G.vertex_count

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    for j in present:
        a, b, t = G.edges[j]
        t = (1 if t else 0) ^ (1 if j in toggle else 0)
        ra, pa = find(G.vertex_of[a])
        rb, pb = find(G.vertex_of[b])
        if ra == rb:
            if pa ^ pb != t:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ t
    return True


def subgraph_metrics(G, subset=None) -> SubgraphMetrics:
    """All metrics of the spanning ribbon subgraph on the given edge set."""
    ne = len(G.edges)
    present = frozenset(range(ne)) if subset is None else _check_subset(G, subset)
    e = len(present)
    v = G.vertex_count
    k = component_count(G, present)
    r = v - k
    n = e - r
    f = boundary_component_count(G, present)
    t = 0 if is_orientable(G, present) else 1
    return SubgraphMetrics(e=e, v=v, k=k, r=r, n=n, f=f, t=t,
                           euler_genus=2 * k - v + e - f)


def partial_petrial(G, subset) -> RibbonGraph:
    """Toggle the twist bit on exactly the given edges; rotations unchanged.

    An involution on each edge subset: applying it twice returns the
    original graph.
    """
    toggle = _check_subset(G, subset)
    edges = [(a, b, t ^ (j in toggle)) for j, (a, b, t) in enumerate(G.edges)]
    return RibbonGraph(G.vertex_count, G.rotations, edges)


def medial_graph(G) -> RibbonGraph:
    """Medial of a connected cellularly embedded graph with at least one edge.

    One degree-4 vertex per edge of G, one medial edge per corner of G,
    embedded in the same surface (equal Euler genus).  Its faces split into
    blacks in bijection with V(G) and whites in bijection with faces of G.

    Layout guarantee used by the Penrose state tracer: at medial vertex j
    the rotation is (c0, c1, c2, c3) such that the two strands of edge j's
    ribbon connect (c0, c1) and (c2, c3); the crossing state connects the
    opposite pairs (c0, c2) and (c1, c3).
    """
    ne = len(G.edges)
    if ne == 0:
        raise RibbonGraphError("medial graph requires at least one edge")
    if component_count(G) != 1:
        raise RibbonGraphError("medial graph requires a connected graph")

    def arm_before(h):
        j = G.edge_of[h]
        a, _b, t = G.edges[j]
        if h == a:
            return 4 * j
        return 4 * j + (1 if t else 2)

    def arm_after(h):
        j = G.edge_of[h]
        a, _b, t = G.edges[j]
        if h == a:
            return 4 * j + 3
        return 4 * j + (2 if t else 1)

    def flip(h):
        j = G.edge_of[h]
        a, _b, t = G.edges[j]
        return t and h != a

    rotations = [(4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3) for j in range(ne)]
    medial_edges = []
    for h in range(2 * ne):
        h2 = G.sigma[h]
        medial_edges.append((arm_after(h), arm_before(h2), flip(h) ^ flip(h2)))
    return RibbonGraph(ne, rotations, medial_edges)


def random_ribbon_graph(rng, max_vertices=4, max_edges=8, twist_prob=0.3,
                        connected=True):
    """Random signed rotation system, for property testing.

    When ``connected`` is set, resamples until the underlying graph is
    connected and no vertex is isolated.
    """
    while True:
        ne = rng.randint(1, max_edges)
        nv = rng.randint(1, min(max_vertices, 2 * ne))
        halves = list(range(2 * ne))
        rng.shuffle(halves)
        cuts = sorted(rng.sample(range(1, 2 * ne), nv - 1)) if nv > 1 else []
        rotations, prev = [], 0
        for c in cuts + [2 * ne]:
            rotations.append(tuple(halves[prev:c]))
            prev = c
        pairing = list(range(2 * ne))
        rng.shuffle(pairing)
        edges = [(pairing[2 * i], pairing[2 * i + 1], rng.random() < twist_prob)
                 for i in range(ne)]
        G = RibbonGraph(nv, rotations, edges)
        if not connected:
            return G
        if component_count(G) == 1 and all(len(r) > 0 for r in G.rotations):
            return G
