"""Bollobas-Riordan, Tutte, and Penrose polynomials of embedded graphs.

Each invariant is a sum over all 2^e edge subsets.  The enumeration runs
on the compiled kernels for larger graphs and on the pure-Python reference
path otherwise; both produce identical exact integer histograms, which are
assembled into MultiPoly values here.  An explicit cap guards against
accidentally requesting an intractable enumeration.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

from .multipoly import MultiPoly, x_minus_one_power
from .ribbon import boundary_component_count, component_count

DEFAULT_EDGE_CAP = 26
_KERNEL_MIN_EDGES = 12


@dataclass(frozen=True)
class PenroseState:
    """One Penrose state: the edges receiving the crossing state (the rest
    get the white smoothing), its curve count c, and its crossing count cr."""

    crossing_set: frozenset
    c: int
    cr: int


class EnumerationCapError(ValueError):
    """Edge count exceeds the subset-enumeration cap."""


def _check_cap(edge_count, cap):
    cap = DEFAULT_EDGE_CAP if cap is None else int(cap)
    if edge_count > cap:
        raise EnumerationCapError(
            "graph has %d edges; enumerating 2^%d subsets exceeds the cap of %d "
            "(pass a larger cap explicitly if you mean it)"
            % (edge_count, edge_count, cap))


def _set_workers(workers):
    if workers is not None:
        import numba
        numba.set_num_threads(max(1, int(workers)))


def _penrose_hist(G, workers=None):
    if len(G.edges) >= _KERNEL_MIN_EDGES:
        try:
            from . import _kernels
        except ImportError:
            _kernels = None
        if _kernels is not None:
            _set_workers(workers)
            return _kernels.penrose_histogram(G)
    from . import statesums
    return statesums.penrose_histogram(G)


def _br_hist(G, workers=None):
    if len(G.edges) >= _KERNEL_MIN_EDGES:
        try:
            from . import _kernels
        except ImportError:
            _kernels = None
        if _kernels is not None:
            _set_workers(workers)
            return _kernels.br_histogram(G)
    from . import statesums
    return statesums.br_histogram(G)


def assemble_bollobas_riordan(hist):
    """Expand a {(r(G)-r(A), n, k-f+n, t): count} histogram into a MultiPoly."""
    poly = MultiPoly.zero()
    for (dr, n, ze, t), count in sorted(hist.items()):
        term = MultiPoly.monomial(count, y=n, z=ze, w=t)
        poly = poly + term * x_minus_one_power(dr)
    return poly


def assemble_penrose(hist):
    """Turn a {c: signed count} histogram into a polynomial in L."""
    return MultiPoly({(0, 0, 0, 0, c): v for c, v in hist.items()})


def bollobas_riordan(G, cap=None, workers=None) -> MultiPoly:
    """Bollobas-Riordan polynomial R(G; x, y, z, w).

    Sum over all spanning ribbon subgraphs A of
    (x-1)^(r(G)-r(A)) * y^n(A) * z^(k(A)-f(A)+n(A)) * w^t(A),
    fully expanded into canonical form.
    """
    _check_cap(len(G.edges), cap)
    return assemble_bollobas_riordan(_br_hist(G, workers))


def tutte(G, cap=None, workers=None) -> MultiPoly:
    """Tutte polynomial T(G; x, y) = R(G; x, y-1, 1, 1)."""
    R = bollobas_riordan(G, cap=cap, workers=workers)
    y = MultiPoly.variable("y")
    return R.substitute(y=y - 1, z=1, w=1)


_penrose_cache = weakref.WeakKeyDictionary()


def penrose(G, cap=None, workers=None) -> MultiPoly:
    """Penrose polynomial P(G; L) of a connected cellularly embedded graph.

    Computed as sum over subsets A of E(G) of (-1)^|A| L^c(A), where c(A)
    counts the boundary components of the partial Petrial of G at A.  The
    literal medial-state route is available separately as
    :func:`penrose_via_medial_states` and must agree with this one.
    """
    if G.vertex_count and component_count(G) != 1:
        raise ValueError("Penrose polynomial requires a connected graph")
    cached = _penrose_cache.get(G)
    if cached is not None:
        return cached
    _check_cap(len(G.edges), cap)
    poly = assemble_penrose(_penrose_hist(G, workers))
    _penrose_cache[G] = poly
    return poly


def penrose_states(G, cap=None):
    """Iterate the Penrose states of G's medial graph, smallest crossing
    sets first.  Intended for inspection at small edge counts; the
    polynomial is the sum of (-1)^cr L^c over these states."""
    if G.vertex_count and component_count(G) != 1:
        raise ValueError("Penrose states require a connected graph")
    ne = len(G.edges)
    _check_cap(ne, cap)
    for A in sorted(range(1 << ne), key=lambda a: (bin(a).count("1"), a)):
        subset = frozenset(j for j in range(ne) if (A >> j) & 1)
        c = boundary_component_count(G, twist_toggle=subset)
        yield PenroseState(crossing_set=subset, c=c, cr=len(subset))


def penrose_eval(G, k, cap=None, workers=None) -> int:
    """Exact integer P(G; k), by substitution into the stored polynomial."""
    if k < 0:
        raise ValueError("evaluation point must be a non-negative integer")
    return penrose(G, cap=cap, workers=workers).evaluate(L=int(k))


def penrose_via_medial_states(G, cap=None) -> MultiPoly:
    """Penrose polynomial by literally smoothing medial-graph states.

    Builds the medial graph, applies white smoothing or crossing at every
    medial vertex, and counts the closed curves of each of the 2^v(G_m)
    states.  Serves as the independent oracle for :func:`penrose`.
    """
    from . import statesums

    if G.vertex_count and component_count(G) != 1:
        raise ValueError("Penrose polynomial requires a connected graph")
    _check_cap(len(G.edges), cap)
    return assemble_penrose(statesums.penrose_histogram_medial(G))


def tutte_deletion_contraction(vertex_count, edges, cap=None) -> MultiPoly:
    """Tutte polynomial of an abstract multigraph by deletion-contraction.

    Loops contribute a factor y, bridges a factor x, and every other edge
    follows T(G) = T(G - e) + T(G / e).  Independent of any embedding, so
    it cross-checks :func:`tutte` on the underlying abstract graph.
    """
    edges = [tuple(sorted((int(u), int(v)))) for (u, v) in edges]
    _check_cap(len(edges), cap)
    for u, v in edges:
        if u < 0 or v >= int(vertex_count):
            raise ValueError("edge endpoint out of range: (%d, %d)" % (u, v))
    x = MultiPoly.variable("x")
    y = MultiPoly.variable("y")
    memo = {}

    def canon(eds):
        label = {}
        out = []
        for u, v in sorted(eds):
            lu = label.setdefault(u, len(label))
            lv = label.setdefault(v, len(label))
            out.append((lu, lv) if lu <= lv else (lv, lu))
        return tuple(sorted(out))

    def components_of(eds):
        parent = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in eds:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(a) for a in parent}) if parent else 0

    def rec(eds):
        key = canon(eds)
        hit = memo.get(key)
        if hit is not None:
            return hit
        loops = [e for e in eds if e[0] == e[1]]
        rest = [e for e in eds if e[0] != e[1]]
        if not rest:
            result = y ** len(loops)
            memo[key] = result
            return result
        # an edge is a bridge iff deleting it increases the component count
        base_k = components_of(rest)
        pick = None
        for i, e in enumerate(rest):
            others = rest[:i] + rest[i + 1:]
            # vertices incident only to e vanish from the union-find; account
            # for them so the component comparison stays meaningful
            verts_all = {v for ed in rest for v in ed}
            verts_rem = {v for ed in others for v in ed}
            k_after = components_of(others) + len(verts_all - verts_rem)
            if k_after == base_k:
                pick = i
                break
        if pick is None:
            result = x ** len(rest) * y ** len(loops)
            memo[key] = result
            return result
        u, v = rest[pick]
        others = rest[:pick] + rest[pick + 1:]
        contracted = [tuple(sorted((u if a == v else a, u if b == v else b)))
                      for (a, b) in others]
        result = (rec(others) + rec(contracted)) * y ** len(loops)
        memo[key] = result
        return result

    return rec(edges)
