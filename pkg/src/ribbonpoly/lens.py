"""Heegaard graphs of lens spaces and their spanning-tree invariants.

The lens space L(p, q) has a unique minimal Heegaard graph: the circulant
C_p(+-1, +-q) embedded in the Heegaard torus.  This module generates that
embedding, computes the spanning-tree count tau(p, q) exactly, implements
the classification predicates (orbit of q, homeomorphism, abstract-graph
isomorphism by brute force), and scans tau across orbits for collisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactdet import spanning_tree_count
from .ribbon import (RibbonGraph, boundary_component_count, component_count,
                     is_orientable)

DEFAULT_SCAN_BOUND = 400

# tau is returned from the exact determinant for p up to this size; beyond
# it the value comes from the Laplacian eigenvalue product evaluated in
# prime fields and recombined by CRT, which is also exact but far cheaper.
_DETERMINANT_MAX_P = 64

_FLOAT_CHECK_MAX_P = 64
_FLOAT_CHECK_RELTOL = 1e-6


class TheoremCheckError(AssertionError):
    """A verified structural fact failed; never swallowed."""


@dataclass(frozen=True)
class LensParams:
    """Coprime pair (p, q) with p >= 3 and q reduced to 1 <= q < p."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 3:
            raise ValueError("lens parameter p must be >= 3, got %d" % p)
        q = q % p
        if q == 0 or math.gcd(p, q) != 1:
            raise ValueError("lens parameters must be coprime with q a unit "
                             "mod p; got (p, q) = (%d, %d)" % (p, self.q))
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class QOrbit:
    """The set {q, -q, q^-1, -q^-1} mod p, stored sorted."""

    p: int
    members: tuple

    def __contains__(self, value):
        return value % self.p in self.members


def lens_params(p, q) -> LensParams:
    return LensParams(int(p), int(q))


def q_orbit(params: LensParams) -> QOrbit:
    p, q = params.p, params.q
    qinv = pow(q, -1, p)
    members = tuple(sorted({q, p - q, qinv, (p - qinv) % p}))
    return QOrbit(p=p, members=members)


def lens_homeomorphic(a: LensParams, b: LensParams) -> bool:
    """Classification of lens spaces: same p and q' in the orbit of q."""
    return a.p == b.p and b.q in q_orbit(a)


def lens_heegaard_graph(params: LensParams) -> RibbonGraph:
    """Torus embedding of the circulant C_p(+-1, +-q).

    Vertices 0..p-1 are the intersection points along the meridian.  Edge
    e_i runs i -> i+1 and edge f_i runs i -> i+q (mod p).  The rotation at
    vertex i interleaves the two strands: (e_{i-1} in, f_{i-q} in, e_i out,
    f_i out).  The construction is checked on return: 4-regular, v = p,
    e = 2p, connected, orientable, f = p, Euler genus 2.
    """
    p, q = params.p, params.q
    # e_i gets half-edges (2i, 2i+1) = (out at i, in at i+1);
    # f_i gets (2p+2i, 2p+2i+1) = (out at i, in at i+q).
    rotations = []
    for i in range(p):
        e_in = 2 * ((i - 1) % p) + 1
        f_in = 2 * p + 2 * ((i - q) % p) + 1
        e_out = 2 * i
        f_out = 2 * p + 2 * i
        rotations.append((e_in, f_in, e_out, f_out))
    edges = [(2 * i, 2 * i + 1, False) for i in range(p)]
    edges += [(2 * p + 2 * i, 2 * p + 2 * i + 1, False) for i in range(p)]
    G = RibbonGraph(p, rotations, edges)

    if any(len(rot) != 4 for rot in G.rotations):
        raise TheoremCheckError("lens graph is not 4-regular")
    if component_count(G) != 1:
        raise TheoremCheckError("lens graph is not connected")
    if not is_orientable(G):
        raise TheoremCheckError("lens graph is not orientable")
    f = boundary_component_count(G)
    genus = 2 * 1 - p + 2 * p - f
    if f != p or genus != 2:
        raise TheoremCheckError(
            "lens graph embedding check failed: f=%d (want %d), Euler genus=%d"
            % (f, p, genus))
    return G


# -- exact spanning-tree counts ------------------------------------------------


def _float_eigenproduct(p, q):
    prod = 1.0
    for j in range(1, p):
        prod *= (4.0 - 2.0 * math.cos(2.0 * math.pi * j / p)
                 - 2.0 * math.cos(2.0 * math.pi * q * j / p))
    return prod / p


def _is_probable_prime(n):
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_prime_cache = {}


def _field_primes(p, min_bits):
    """Primes ell = k*p + 1 whose product exceeds 2^min_bits, cached per p."""
    cached = _prime_cache.get(p)
    if cached and cached[0] >= min_bits:
        return cached[1]
    primes = []
    bits = 0
    k = (1 << 59) // p + 1
    while bits < min_bits:
        ell = k * p + 1
        if _is_probable_prime(ell):
            primes.append(ell)
            bits += ell.bit_length() - 1
        k += 1
    _prime_cache[p] = (bits, primes)
    return primes


def _order_p_root(ell, p):
    """An element of multiplicative order exactly p in F_ell, ell = 1 mod p."""
    prime_divisors = set()
    m = p
    d = 2
    while d * d <= m:
        if m % d == 0:
            prime_divisors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        prime_divisors.add(m)
    g = 2
    while True:
        w = pow(g, (ell - 1) // p, ell)
        if w != 1 and all(pow(w, p // r, ell) != 1 for r in prime_divisors):
            return w
        g += 1


def _tau_modular(p, q):
    """tau via the eigenvalue product in prime fields, CRT-recombined.

    The Laplacian cofactor determinant equals (1/p) * prod over j=1..p-1 of
    (4 - w^j - w^-j - w^qj - w^-qj) with w a primitive p-th root of unity.
    Evaluating in F_ell with ell = 1 mod p keeps everything integral, and
    tau < 8^(p-1) bounds the number of primes needed.
    """
    min_bits = 3 * (p - 1) + 8
    primes = _field_primes(p, min_bits)
    residues = []
    for ell in primes:
        w = _order_p_root(ell, p)
        powers = [1] * p
        for j in range(1, p):
            powers[j] = powers[j - 1] * w % ell
        prod = 1
        for j in range(1, p):
            qj = q * j % p
            val = (4 - powers[j] - powers[p - j]
                   - powers[qj] - powers[p - qj]) % ell
            prod = prod * val % ell
        residues.append(prod * pow(p, -1, ell) % ell)
    # CRT combine
    value, modulus = 0, 1
    for r, ell in zip(residues, primes):
        h = (r - value) * pow(modulus, -1, ell) % ell
        value += modulus * h
        modulus *= ell
    return value


_tau_cache = {}


def tau(params: LensParams, bound=DEFAULT_SCAN_BOUND):
    """Exact spanning-tree count of C_p(+-1, +-q).

    For p up to 64 this is the fraction-free Laplacian cofactor determinant
    and is additionally cross-checked against the floating eigenvalue
    product to relative 1e-6 (the float value is never returned).  For
    larger p the determinant is evaluated modulo primes and recombined,
    which stays exact at any p within the scan bound.
    """
    p, q = params.p, params.q
    if p > bound:
        raise ValueError("p=%d exceeds the scan bound %d" % (p, bound))
    cached = _tau_cache.get((p, q))
    if cached is not None:
        return cached
    value = _tau_uncached(p, q)
    _tau_cache[(p, q)] = value
    return value


def _tau_uncached(p, q):
    if p <= _DETERMINANT_MAX_P:
        ends = [(i, (i + 1) % p) for i in range(p)]
        ends += [(i, (i + q) % p) for i in range(p)]
        value = spanning_tree_count(p, ends)
        approx = _float_eigenproduct(p, q)
        if abs(approx - value) > _FLOAT_CHECK_RELTOL * max(1.0, float(value)):
            raise TheoremCheckError(
                "float eigenvalue product %r disagrees with exact tau %d "
                "for (p, q) = (%d, %d)" % (approx, value, p, q))
        return value
    return _tau_modular(p, q)


@dataclass(frozen=True)
class SquareShapeReport:
    """Outcome of the perfect-square shape check for tau(p, q)."""

    p: int
    q: int
    odd_p: bool
    lambda_mid: int | None  # 6 - 2*(-1)^q when p is even, else None
    root: int               # A (odd p) or B (even p)
    tau: int


def square_shape_check(params: LensParams, bound=DEFAULT_SCAN_BOUND) -> SquareShapeReport:
    """Check the square shape of tau: p*A^2 for odd p, (lam/p)*B^2 for even p.

    Raises TheoremCheckError if the shape fails, which would falsify the
    structure theorem rather than indicate bad input.
    """
    p, q = params.p, params.q
    t = tau(params, bound=bound)
    if p % 2 == 1:
        quotient, rem = divmod(t, p)
        root = math.isqrt(quotient)
        if rem != 0 or root * root != quotient:
            raise TheoremCheckError(
                "tau(%d,%d)=%d is not p times a perfect square" % (p, q, t))
        return SquareShapeReport(p=p, q=q, odd_p=True, lambda_mid=None,
                                 root=root, tau=t)
    lam = 6 - 2 * (-1) ** q
    quotient, rem = divmod(t * p, lam)
    root = math.isqrt(quotient)
    if rem != 0 or root * root != quotient:
        raise TheoremCheckError(
            "tau(%d,%d)=%d is not (lambda/p) times a perfect square "
            "(lambda=%d)" % (p, q, t, lam))
    return SquareShapeReport(p=p, q=q, odd_p=False, lambda_mid=lam,
                             root=root, tau=t)


def circulant_isomorphic_bruteforce(a: LensParams, b: LensParams) -> bool:
    """Abstract-graph isomorphism of C_p(+-1,+-q) by vertex-bijection search.

    Multiplicity-respecting backtracking over all vertex bijections; only
    feasible for small p, so p <= 9 is enforced.
    """
    if a.p != b.p:
        return False
    p = a.p
    if p > 9:
        raise ValueError("brute-force isomorphism is limited to p <= 9")

    def adjacency(q):
        m = [[0] * p for _ in range(p)]
        for i in range(p):
            for step in (1, q):
                j = (i + step) % p
                m[i][j] += 1
                m[j][i] += 1
        return m

    m1 = adjacency(a.q)
    m2 = adjacency(b.q)
    image = [-1] * p
    used = [False] * p

    def extend(v):
        if v == p:
            return True
        for target in range(p):
            if used[target]:
                continue
            ok = True
            for u in range(v):
                if m1[v][u] != m2[target][image[u]]:
                    ok = False
                    break
            if ok:
                image[v] = target
                used[target] = True
                if extend(v + 1):
                    return True
                used[target] = False
                image[v] = -1
        return False

    return extend(0)


# -- tau scans -----------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRow:
    p: int
    orbit_rep: int
    orbit: tuple
    tau: int


@dataclass(frozen=True)
class TauCollision:
    p: int
    orbit_rep_a: int
    orbit_rep_b: int
    tau: int


def unit_orbits(p):
    """Orbits of (Z/p)^* under q -> -q and q -> q^-1, sorted by minimum."""
    units = [q for q in range(1, p) if math.gcd(q, p) == 1]
    seen = set()
    orbits = []
    for q in units:
        if q in seen:
            continue
        orbit = q_orbit(LensParams(p, q)).members
        seen.update(orbit)
        orbits.append(orbit)
    return sorted(orbits, key=min)


def scan_tau_orbits(p_max, p_min=3, bound=DEFAULT_SCAN_BOUND):
    """One row per (p, orbit) with its tau; plus any cross-orbit collisions.

    Verifies along the way that tau is constant on every orbit (raising
    TheoremCheckError otherwise) and collects pairs of distinct orbits for
    the same p sharing a tau value.  Rows are emitted in sorted order so
    output is deterministic.
    """
    if not (3 <= p_min <= p_max <= bound):
        raise ValueError("scan range must satisfy 3 <= p_min <= p_max <= %d"
                         % bound)
    rows = []
    collisions = []
    for p in range(p_min, p_max + 1):
        by_tau = {}
        for orbit in unit_orbits(p):
            values = {q: tau(LensParams(p, q), bound=bound) for q in orbit}
            distinct = set(values.values())
            if len(distinct) != 1:
                raise TheoremCheckError(
                    "tau is not constant on orbit %r of p=%d: %r"
                    % (orbit, p, values))
            t = distinct.pop()
            rep = min(orbit)
            rows.append(OrbitRow(p=p, orbit_rep=rep, orbit=orbit, tau=t))
            if t in by_tau:
                collisions.append(TauCollision(p=p, orbit_rep_a=by_tau[t],
                                               orbit_rep_b=rep, tau=t))
            else:
                by_tau[t] = rep
    return rows, collisions


def scan_rows_to_csv(rows):
    """CSV rendering: header p,orbit_rep,orbit,tau with {a|b|c} orbit sets."""
    lines = ["p,orbit_rep,orbit,tau"]
    for row in rows:
        orbit = "{%s}" % "|".join(str(m) for m in row.orbit)
        lines.append("%d,%d,%s,%d" % (row.p, row.orbit_rep, orbit, row.tau))
    return "\n".join(lines) + "\n"
