"""Compiled subset-enumeration kernels.

numba versions of the reference enumerations in statesums.py.  The subset
range is split into a fixed number of chunks enumerated in parallel; each
chunk accumulates a private integer histogram and the partials are merged
by addition afterwards, so the result is bit-identical for any worker
count.  Import of this module is deferred until a kernel is actually
needed, because numba compilation is not free.
"""

from __future__ import annotations

import warnings

import numpy as np

# the TBB version probe is noise on hosts with an older TBB; the workqueue
# threading layer is used instead and results are unaffected
warnings.filterwarnings(
    "ignore", message="The TBB threading layer requires TBB version")

from numba import njit, prange

_N_CHUNKS = 64


@njit(cache=True)
def _parity64(x):
    x ^= x >> 32
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return x & 1


@njit(cache=True, parallel=True)
def _penrose_chunks(sigma, sigma_inv, theta, edge_of, twist, ne, isolated, cmax):
    nflags = 4 * ne
    total = np.int64(1) << ne
    hist = np.zeros((_N_CHUNKS, 2, cmax), dtype=np.int64)
    for chunk in prange(_N_CHUNKS):
        lo = total * chunk // _N_CHUNKS
        hi = total * (chunk + 1) // _N_CHUNKS
        visited = np.full(nflags, -1, dtype=np.int64)
        for A in range(lo, hi):
            par = _parity64(A)
            c = 0
            for f0 in range(nflags):
                if visited[f0] == A:
                    continue
                c += 1
                f = f0
                while visited[f] != A:
                    visited[f] = A
                    h = f >> 1
                    d = f & 1
                    s = sigma[h] if d == 0 else sigma_inv[h]
                    tw = twist[s] ^ ((A >> edge_of[s]) & 1)
                    f = (theta[s] << 1) | (d ^ tw)
            hist[chunk, par, c // 2 + isolated] += 1
    return hist.sum(axis=0)


@njit(cache=True, parallel=True)
def _br_chunks(sigma, sigma_inv, theta, edge_of, ends_u, ends_v, twist, ne, nv, rG):
    nflags = 4 * ne
    total = np.int64(1) << ne
    d_dr = nv + 1
    d_n = ne + 1
    d_z = ne + nv + 2
    hist = np.zeros((_N_CHUNKS, d_dr, d_n, d_z, 2), dtype=np.int64)
    for chunk in prange(_N_CHUNKS):
        lo = total * chunk // _N_CHUNKS
        hi = total * (chunk + 1) // _N_CHUNKS
        visited = np.full(nflags, -1, dtype=np.int64)
        parent = np.empty(nv, dtype=np.int64)
        parity = np.empty(nv, dtype=np.int64)
        touched = np.empty(nv, dtype=np.uint8)
        for A in range(lo, hi):
            for v in range(nv):
                parent[v] = v
                parity[v] = 0
                touched[v] = 0
            e_cnt = 0
            k = nv
            t = 0
            for j in range(ne):
                if not (A >> j) & 1:
                    continue
                e_cnt += 1
                u = ends_u[j]
                w = ends_v[j]
                touched[u] = 1
                touched[w] = 1
                tw = twist[2 * j]
                ru = u
                pu = 0
                while parent[ru] != ru:
                    pu ^= parity[ru]
                    ru = parent[ru]
                rv = w
                pv = 0
                while parent[rv] != rv:
                    pv ^= parity[rv]
                    rv = parent[rv]
                if ru == rv:
                    if pu ^ pv != tw:
                        t = 1
                else:
                    parent[ru] = rv
                    parity[ru] = pu ^ pv ^ tw
                    k -= 1
            c = 0
            for f0 in range(nflags):
                if visited[f0] == A:
                    continue
                if not (A >> edge_of[f0 >> 1]) & 1:
                    continue
                c += 1
                f = f0
                while visited[f] != A:
                    visited[f] = A
                    h = f >> 1
                    d = f & 1
                    s = sigma[h] if d == 0 else sigma_inv[h]
                    while not (A >> edge_of[s]) & 1:
                        s = sigma[s] if d == 0 else sigma_inv[s]
                    f = (theta[s] << 1) | (d ^ twist[s])
            iso = 0
            for v in range(nv):
                if touched[v] == 0:
                    iso += 1
            f_cnt = c // 2 + iso
            r = nv - k
            n = e_cnt - r
            hist[chunk, rG - r, n, k - f_cnt + n, t] += 1
    return hist.sum(axis=0)


def _arrays(G):
    sigma = np.asarray(G.sigma, dtype=np.int64)
    sigma_inv = np.asarray(G.sigma_inv, dtype=np.int64)
    theta = np.asarray(G.theta, dtype=np.int64)
    edge_of = np.asarray(G.edge_of, dtype=np.int64)
    twist = np.asarray([1 if t else 0 for t in G.twist], dtype=np.int64)
    return sigma, sigma_inv, theta, edge_of, twist


def penrose_histogram(G):
    """Kernel twin of statesums.penrose_histogram."""
    ne = len(G.edges)
    sigma, sigma_inv, theta, edge_of, twist = _arrays(G)
    isolated = sum(1 for rot in G.rotations if not rot)
    cmax = 2 * ne + G.vertex_count + 2
    hist = _penrose_chunks(sigma, sigma_inv, theta, edge_of, twist,
                           np.int64(ne), np.int64(isolated), np.int64(cmax))
    out = {}
    for c in range(cmax):
        val = int(hist[0, c]) - int(hist[1, c])
        if val:
            out[c] = val
    return out


def br_histogram(G):
    """Kernel twin of statesums.br_histogram."""
    from .ribbon import component_count

    ne = len(G.edges)
    nv = G.vertex_count
    sigma, sigma_inv, theta, edge_of, twist = _arrays(G)
    ends = G.underlying_edges()
    ends_u = np.asarray([u for u, _ in ends], dtype=np.int64)
    ends_v = np.asarray([v for _, v in ends], dtype=np.int64)
    rG = nv - component_count(G)
    hist = _br_chunks(sigma, sigma_inv, theta, edge_of, ends_u, ends_v, twist,
                      np.int64(ne), np.int64(nv), np.int64(rG))
    out = {}
    nz = np.nonzero(hist)
    for dr, n, ze, t in zip(*nz):
        out[(int(dr), int(n), int(ze), int(t))] = int(hist[dr, n, ze, t])
    return out
