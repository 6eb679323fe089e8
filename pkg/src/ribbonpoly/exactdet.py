"""Exact integer linear algebra: fraction-free determinants and Matrix-Tree.

Bareiss elimination keeps every intermediate value an integer (each is a
minor of the original matrix), so determinants of integer matrices come
out exact at any size the caller can afford.
"""

from __future__ import annotations


def bareiss_determinant(matrix):
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def spanning_tree_count(vertex_count, edges):
    """Number of spanning trees of a multigraph (Matrix-Tree theorem).

    ``edges`` is a list of endpoint pairs; parallel edges count with
    multiplicity and loops are ignored.  The count is the determinant of
    the Laplacian with one row and column removed.
    """
    n = int(vertex_count)
    if n == 0:
        return 0
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)
