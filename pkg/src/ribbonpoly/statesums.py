"""Reference (pure Python) subset enumerations for the polynomial state sums.

These enumerate all 2^e edge subsets directly and exist for two reasons:
they are the fallback when the compiled kernels are unavailable, and they
are the independent twin the kernel results are checked against in the
test suite.  Both paths produce exact integer histograms, so agreement is
bit-for-bit.
"""

from __future__ import annotations


def _prepared(G):
    return (G.sigma, G.sigma_inv, G.theta, G.edge_of, G.vertex_of,
            [1 if t else 0 for t in G.twist])


def penrose_histogram(G):
    """Signed count of partial-Petrial states per boundary-component count.

    Returns {c: sum over subsets A with f(petrial_A) = c of (-1)^|A|}.
    """
    ne = len(G.edges)
    sigma, sigma_inv, theta, edge_of, _vertex_of, twist = _prepared(G)
    nflags = 4 * ne
    isolated = sum(1 for rot in G.rotations if not rot)
    visited = [-1] * nflags
    hist = {}
    for A in range(1 << ne):
        parity = bin(A).count("1") & 1
        c = 0
        for f0 in range(nflags):
            if visited[f0] == A:
                continue
            c += 1
            f = f0
            while visited[f] != A:
                visited[f] = A
                h, d = f >> 1, f & 1
                s = sigma[h] if d == 0 else sigma_inv[h]
                tw = twist[s] ^ ((A >> edge_of[s]) & 1)
                f = (theta[s] << 1) | (d ^ tw)
        c = c // 2 + isolated
        hist[c] = hist.get(c, 0) + (1 - 2 * parity)
    return {c: v for c, v in hist.items() if v}


def br_histogram(G):
    """Counts of edge subsets per Bollobas-Riordan exponent class.

    Returns {(r(G)-r(A), n(A), k(A)-f(A)+n(A), t(A)): number of subsets}.
    """
    ne = len(G.edges)
    nv = G.vertex_count
    sigma, sigma_inv, theta, edge_of, vertex_of, twist = _prepared(G)
    ends = [(vertex_of[a], vertex_of[b]) for (a, b, _t) in G.edges]

    # rank of the full graph
    rG = nv - _components(nv, ends, (1 << ne) - 1)

    nflags = 4 * ne
    visited = [-1] * nflags
    hist = {}
    for A in range(1 << ne):
        e_cnt = bin(A).count("1")
        k, t = _components_and_orientability(nv, ends, twist, A)
        # boundary walk with absent half-edges skipped
        c = 0
        for f0 in range(nflags):
            if visited[f0] == A or not (A >> edge_of[f0 >> 1]) & 1:
                continue
            c += 1
            f = f0
            while visited[f] != A:
                visited[f] = A
                h, d = f >> 1, f & 1
                s = sigma[h] if d == 0 else sigma_inv[h]
                while not (A >> edge_of[s]) & 1:
                    s = sigma[s] if d == 0 else sigma_inv[s]
                f = (theta[s] << 1) | (d ^ twist[s])
        touched = set()
        for j in range(ne):
            if (A >> j) & 1:
                touched.update(ends[j])
        f_cnt = c // 2 + (nv - len(touched))
        r = nv - k
        n = e_cnt - r
        key = (rG - r, n, k - f_cnt + n, t)
        hist[key] = hist.get(key, 0) + 1
    return hist


def _components(nv, ends, mask):
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j, (u, v) in enumerate(ends):
        if (mask >> j) & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in range(nv)})


def _components_and_orientability(nv, ends, twist, mask):
    parent = list(range(nv))
    parity = [0] * nv

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    t = 0
    k = nv
    for j, (u, v) in enumerate(ends):
        if not (mask >> j) & 1:
            continue
        tw = twist[2 * j]
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv != tw:
                t = 1
        else:
            parent[ru] = rv
            parity[ru] = pu ^ pv ^ tw
            k -= 1
    return k, t


def penrose_histogram_medial(G):
    """Signed boundary counts via literal medial Penrose states.

    Builds the medial graph, chooses white smoothing or crossing at every
    medial vertex, and counts the closed curves traced by the state.  This
    never inspects twist bits of the medial, only its strand connectivity,
    so it is an independent route to the same histogram as
    :func:`penrose_histogram`.
    """
    from .ribbon import medial_graph

    Gm = medial_graph(G)
    mv = Gm.vertex_count
    theta = Gm.theta
    rotations = Gm.rotations
    hist = {}
    pair = [0] * (4 * mv)
    for state in range(1 << mv):
        for j in range(mv):
            c0, c1, c2, c3 = rotations[j]
            if (state >> j) & 1:  # crossing
                pair[c0], pair[c2] = c2, c0
                pair[c1], pair[c3] = c3, c1
            else:  # white smoothing
                pair[c0], pair[c1] = c1, c0
                pair[c2], pair[c3] = c3, c2
        seen = [False] * (4 * mv)
        c = 0
        for s0 in range(4 * mv):
            if seen[s0]:
                continue
            c += 1
            s = s0
            while not seen[s]:
                seen[s] = True
                s2 = pair[s]
                seen[s2] = True
                s = theta[s2]
        parity = bin(state).count("1") & 1
        hist[c] = hist.get(c, 0) + (1 - 2 * parity)
    return {c: v for c, v in hist.items() if v}
