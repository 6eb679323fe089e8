#!/usr/bin/env python3
"""Search for minimal genus-2 Heegaard diagrams of the Poincare sphere.

A genus-2 Heegaard diagram with standard meridians v1, v2 and transversal
crossings is encoded by (i) the cyclic crossing words of the two w-curves
(reading which meridian is crossed, with direction), and (ii) the cyclic
order of the crossings along each meridian.  Any homology sphere other
than S^3 needs at least 12 crossings, and the Poincare sphere attains 12,
so the search space is:

  relator pairs:  cyclically reduced words with |r1| + |r2| = 12 whose
                  exponent matrix has determinant +-1 (trivial homology)
                  and which present a group of order 120 (then necessarily
                  the binary icosahedral group, and the manifold is the
                  Poincare sphere);
  interleavings:  cyclic arrangements of the a-crossings along v1 and the
                  b-crossings along v2.

An arrangement is kept when the resulting 4-regular ribbon graph is
connected, has exactly 10 faces (cellular in the genus-2 surface), and
both curve-system complements are connected (so it really is a Heegaard
diagram).  Every kept diagram is a minimal Heegaard graph of the Poincare
sphere; their Penrose polynomials are computed last and candidates are
grouped by polynomial.

Writes results incrementally to poincare_candidates.json.
"""

import itertools
import json
import sys
import time
from collections import deque

import numpy as np

sys.path.insert(0, "src")

from ribbonpoly import (RibbonGraph, boundary_walks, component_count,
                        penrose)

TARGET = {12: 1, 11: -24, 10: 553, 9: -6186, 8: 42664, 7: -193904,
          6: 595168, 5: -1238528, 4: 1718528, 3: -1518592, 2: 770816,
          1: -170496}


# ---------------------------------------------------------------- SL(2,5)

def sl25():
    """Element list, index map, multiplication table of SL(2,5)."""
    def mul(m, n):
        return ((m[0] * n[0] + m[1] * n[2]) % 5, (m[0] * n[1] + m[1] * n[3]) % 5,
                (m[2] * n[0] + m[3] * n[2]) % 5, (m[2] * n[1] + m[3] * n[3]) % 5)

    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    elems = {(1, 0, 0, 1)}
    frontier = [(1, 0, 0, 1)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                r = mul(m, g)
                if r not in elems:
                    elems.add(r)
                    nxt.append(r)
        frontier = nxt
    elems = sorted(elems)
    index = {m: i for i, m in enumerate(elems)}
    table = np.zeros((len(elems), len(elems)), dtype=np.int16)
    for i, m in enumerate(elems):
        for j, n in enumerate(elems):
            table[i, j] = index[mul(m, n)]
    inv = np.zeros(len(elems), dtype=np.int16)
    ident = index[(1, 0, 0, 1)]
    for i in range(len(elems)):
        inv[i] = int(np.where(table[i] == ident)[0][0])
    return elems, index, table, inv, ident


def generating_pairs_mask(table, ident):
    n = table.shape[0]
    mask = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(n):
            seen = {ident}
            stack = [ident]
            while stack:
                c = stack.pop()
                for g in (x, y):
                    r = int(table[c, g])
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
                if len(seen) == n:
                    break
            mask[x, y] = len(seen) == n
    return mask


def word_kill_mask(word, table, inv, ident):
    """Boolean (120,120): pairs (X, Y) with word(X, Y) = identity."""
    n = table.shape[0]
    X = np.repeat(np.arange(n), n).reshape(n, n)
    Y = np.tile(np.arange(n), n).reshape(n, n)
    Xi = inv[X]
    Yi = inv[Y]
    cur = np.full((n, n), ident, dtype=np.int64)
    for (g, s) in word:
        arg = (X if s > 0 else Xi) if g == 0 else (Y if s > 0 else Yi)
        cur = table[cur, arg]
    return cur == ident


# ------------------------------------------------------------ word search

LETTERS = [(0, 1), (0, -1), (1, 1), (1, -1)]  # a, A, b, B


def cyclically_reduced_words(length):
    out = []
    for combo in itertools.product(range(4), repeat=length):
        word = [LETTERS[i] for i in combo]
        ok = True
        for i in range(length):
            g1, s1 = word[i]
            g2, s2 = word[(i + 1) % length]
            if g1 == g2 and s1 == -s2:
                ok = False
                break
        if ok:
            out.append(tuple(word))
    return out


def word_variants(word):
    """All cyclic rotations of the word and of its inverse."""
    n = len(word)
    inv = tuple((g, -s) for (g, s) in reversed(word))
    vs = []
    for w in (word, inv):
        for r in range(n):
            vs.append(w[r:] + w[:r])
    return vs


def apply_gen_symmetry(word, swap, flip_a, flip_b):
    out = []
    for (g, s) in word:
        if swap:
            g = 1 - g
        if (g == 0 and flip_a) or (g == 1 and flip_b):
            s = -s
        out.append((g, s))
    return tuple(out)


def pair_canonical(w1, w2):
    """Canonical key of a relator pair under all diagram symmetries."""
    best = None
    for swap in (False, True):
        for fa in (False, True):
            for fb in (False, True):
                a = apply_gen_symmetry(w1, swap, fa, fb)
                b = apply_gen_symmetry(w2, swap, fa, fb)
                for aa in word_variants(a):
                    for bb in word_variants(b):
                        for pair in ((aa, bb), (bb, aa)) if len(aa) == len(bb) else ((aa, bb),):
                            if best is None or pair < best:
                                best = pair
    return best


def exponent_det(w1, w2):
    m = [[0, 0], [0, 0]]
    for i, w in enumerate((w1, w2)):
        for (g, s) in w:
            m[i][g] += s
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


# ------------------------------------------------------- coset enumeration

def group_order(relators, ngens=2, max_cosets=200000):
    """Order of <x1..xn | relators> by HLT coset enumeration over the
    trivial subgroup; returns None if the table exceeds max_cosets."""
    ncols = 2 * ngens

    def col(g, s):
        return 2 * g + (0 if s > 0 else 1)

    rel_cols = [[col(g, s) for (g, s) in r] for r in relators]
    table = [None, [0] * ncols]  # 1-based cosets, 0 = undefined
    p = [0, 1]

    def find(a):
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    merge_queue = deque()

    def merge(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        p[b] = a
        merge_queue.append(b)

    def process_coincidences():
        while merge_queue:
            b = merge_queue.popleft()
            row = table[b]
            for x in range(ncols):
                d = row[x]
                if d:
                    # undo the inverse entry of b, then re-register
                    dr = find(d)
                    a = find(b)
                    e = table[dr][x ^ 1]
                    if e and find(e) == find(b):
                        table[dr][x ^ 1] = 0
                    u = table[a][x]
                    if u:
                        merge(find(u), dr)
                    else:
                        table[a][x] = dr
                    v = table[dr][x ^ 1]
                    if v:
                        merge(find(v), a)
                    else:
                        table[dr][x ^ 1] = a

    def define(a, x):
        table.append([0] * ncols)
        p.append(len(table) - 1)
        b = len(table) - 1
        table[a][x] = b
        table[b][x ^ 1] = a
        return b

    def scan_and_fill(a, word):
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and table[f][word[i]]:
                f = find(table[f][word[i]])
                i += 1
            if i > j:
                if f != b:
                    merge(f, b)
                    process_coincidences()
                return
            while j >= i and table[b][word[j] ^ 1]:
                b = find(table[b][word[j] ^ 1])
                j -= 1
            if j < i:
                merge(f, b)
                process_coincidences()
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            f = define(f, word[i])
            i += 1

    a = 1
    while a < len(table):
        if find(a) != a:
            a += 1
            continue
        for word in rel_cols:
            if find(a) != a:
                break
            scan_and_fill(find(a), word)
        if find(a) == a:
            for x in range(ncols):
                if find(a) != a:
                    break
                if not table[find(a)][x]:
                    define(find(a), x)
                    if len(table) > max_cosets:
                        return None
        a += 1
    return len({find(c) for c in range(1, len(table))})


# ------------------------------------------------------ diagram arrangement

def build_diagram(w1, w2, order1, order2):
    """Ribbon graph of the diagram with the given meridian crossing orders.

    Positions 0..11 (word1 then word2) are the vertices.  order1/order2 are
    the cyclic sequences of positions along v1 and v2.  Edge ids: v1-edges,
    then v2-edges, then w1-edges, then w2-edges.  Rotation at a positive
    crossing is (v_in, w_in, v_out, w_out); a negative crossing swaps the
    two w slots.
    """
    words = list(w1) + list(w2)
    npos = len(words)
    cycles = []
    cycles.extend((list(order1), list(order2)))
    w1pos = list(range(len(w1)))
    w2pos = list(range(len(w1), npos))
    cycles.extend((w1pos, w2pos))

    edges = []
    in_half = {}
    out_half = {}
    for cyc_id, cyc in enumerate(cycles):
        strand = "v" if cyc_id < 2 else "w"
        for i, pos in enumerate(cyc):
            nxt = cyc[(i + 1) % len(cyc)]
            j = len(edges)
            edges.append((2 * j, 2 * j + 1, False))
            out_half[(strand, pos)] = 2 * j
            in_half[(strand, nxt)] = 2 * j + 1
    rotations = []
    for pos in range(npos):
        _g, s = words[pos]
        vi, vo = in_half[("v", pos)], out_half[("v", pos)]
        wi, wo = in_half[("w", pos)], out_half[("w", pos)]
        if s > 0:
            rotations.append((vi, wi, vo, wo))
        else:
            rotations.append((vi, wo, vo, wi))
    return RibbonGraph(npos, rotations, edges)


def diagram_checks(G, n_v_edges):
    """(cellular-in-genus-2, S-v connected, S-w connected)."""
    if component_count(G) != 1:
        return False, False, False
    walks = boundary_walks(G)
    faces = len(walks)
    if faces != 10:
        return False, False, False
    # edge -> incident faces (each edge is traversed twice over all faces)
    edge_faces = {}
    for fid, walk in enumerate(walks):
        for (h, d) in walk:
            s = G.sigma[h] if d == 0 else G.sigma_inv[h]
            e = G.edge_of[s]
            edge_faces.setdefault(e, []).append(fid)

    def connected_after_cut(keep_edges):
        parent = list(range(faces))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in keep_edges:
            fs = edge_faces[e]
            a, b = find(fs[0]), find(fs[1])
            if a != b:
                parent[a] = b
        return len({find(i) for i in range(faces)}) == 1

    ne = len(G.edges)
    sv = connected_after_cut(range(n_v_edges, ne))   # cut along v: glue across w
    sw = connected_after_cut(range(n_v_edges))       # cut along w: glue across v
    return True, sv, sw


def canonical_code(G):
    """Label-independent code of a connected ribbon graph (orientable use)."""
    n = 2 * len(G.edges)
    best = None
    for start in range(n):
        for use_inv in (False, True):
            sigma = G.sigma_inv if use_inv else G.sigma
            label = {start: 0}
            order = [start]
            i = 0
            while i < len(order):
                h = order[i]
                i += 1
                for nxt in (sigma[h], G.theta[h]):
                    if nxt not in label:
                        label[nxt] = len(label)
                        order.append(nxt)
            code = tuple(label[sigma[h]] for h in order) + \
                tuple(label[G.theta[h]] for h in order)
            if best is None or code < best:
                best = code
    return best


# --------------------------------------------------------------- search

def word_to_str(w):
    names = {(0, 1): "a", (0, -1): "A", (1, 1): "b", (1, -1): "B"}
    return "".join(names[l] for l in w)


def candidate_word_pairs():
    print("enumerating relator pairs ...", flush=True)
    elems, index, table, inv, ident = sl25()
    gen_mask = generating_pairs_mask(table, ident)
    print("  SL(2,5): %d elements, %d generating pairs"
          % (len(elems), int(gen_mask.sum())), flush=True)

    words = {l: cyclically_reduced_words(l) for l in (5, 6, 7)}
    kill = {}

    def kill_mask(w):
        if w not in kill:
            kill[w] = word_kill_mask(w, table, inv, ident)
        return kill[w]

    seen = set()
    survivors = []
    t0 = time.time()
    for (l1, l2) in ((6, 6), (5, 7)):
        n_checked = 0
        for w1 in words[l1]:
            m1 = kill_mask(w1)
            if not m1.any():
                continue
            for w2 in words[l2]:
                if abs(exponent_det(w1, w2)) != 1:
                    continue
                n_checked += 1
                both = kill_mask(w2) & m1
                if not (both & gen_mask).any():
                    continue
                key = pair_canonical(w1, w2)
                if key in seen:
                    continue
                seen.add(key)
                order = group_order([w1, w2])
                if order == 120:
                    survivors.append((w1, w2))
                    print("  candidate #%d: %s , %s  (order 120)"
                          % (len(survivors), word_to_str(w1), word_to_str(w2)),
                          flush=True)
        print("  lengths (%d,%d): %d det-filtered pairs checked, %.1fs"
              % (l1, l2, n_checked, time.time() - t0), flush=True)
    return survivors


def arrangements(wpair):
    w1, w2 = wpair
    words = list(w1) + list(w2)
    J1 = [i for i, (g, _s) in enumerate(words) if g == 0]
    J2 = [i for i, (g, _s) in enumerate(words) if g == 1]
    if not J1 or not J2:
        return
    for perm1 in itertools.permutations(J1[1:]):
        order1 = [J1[0]] + list(perm1)
        for perm2 in itertools.permutations(J2[1:]):
            order2 = [J2[0]] + list(perm2)
            yield order1, order2, len(J1) + len(J2)


MAX_ARRANGEMENTS = 1_000_000
PENROSE_PER_PAIR = 4


def main():
    survivors = candidate_word_pairs()
    print("%d word pairs present a group of order 120" % len(survivors), flush=True)

    import math

    all_reps = []
    t0 = time.time()
    for wi, wpair in enumerate(survivors):
        w1, w2 = wpair
        words = list(w1) + list(w2)
        m1 = sum(1 for (g, _s) in words if g == 0)
        m2 = len(words) - m1
        count = math.factorial(m1 - 1) * math.factorial(m2 - 1)
        if count > MAX_ARRANGEMENTS:
            print("pair %d/%d %s,%s: skipping %d arrangements (over cap)"
                  % (wi + 1, len(survivors), word_to_str(w1), word_to_str(w2),
                     count), flush=True)
            continue
        n_valid = 0
        codes = set()
        reps = []
        for order1, order2, n_v_edges in arrangements(wpair):
            G = build_diagram(w1, w2, order1, order2)
            cellular, sv, sw = diagram_checks(G, n_v_edges)
            if not (cellular and sv and sw):
                continue
            n_valid += 1
            code = canonical_code(G)
            if code in codes:
                continue
            codes.add(code)
            reps.append((order1, order2, G))
        print("pair %d/%d %s,%s (m=%d+%d): %d valid arrangements, "
              "%d distinct ribbon graphs (%.1fs)"
              % (wi + 1, len(survivors), word_to_str(w1), word_to_str(w2),
                 m1, m2, n_valid, len(reps), time.time() - t0), flush=True)
        for order1, order2, G in reps:
            all_reps.append((w1, w2, order1, order2, G))

    print("total distinct candidate ribbon graphs: %d" % len(all_reps), flush=True)

    # Penrose pass: a few representatives per word pair first, the rest after.
    by_pair = {}
    for item in all_reps:
        by_pair.setdefault((item[0], item[1]), []).append(item)
    first_round = []
    second_round = []
    for items in by_pair.values():
        first_round.extend(items[:PENROSE_PER_PAIR])
        second_round.extend(items[PENROSE_PER_PAIR:])

    found = {}
    results = []

    def handle(item):
        w1, w2, order1, order2, G = item
        P = penrose(G)
        coeffs = {exp[4]: c for exp, c in P.terms.items()}
        match = coeffs == TARGET
        results.append({
            "w1": word_to_str(w1),
            "w2": word_to_str(w2),
            "order1": order1,
            "order2": order2,
            "vertices": G.vertex_count,
            "edges": [list(e[:2]) + [bool(e[2])] for e in G.edges],
            "rotations": [list(r) for r in G.rotations],
            "penrose": {str(k): v for k, v in sorted(coeffs.items())},
            "match": match,
        })
        key = tuple(sorted(coeffs.items()))
        found.setdefault(key, 0)
        found[key] += 1
        print("  %s,%s %r: penrose %s (distinct polys: %d, done: %d, %.0fs)"
              % (word_to_str(w1), word_to_str(w2), order1,
                 "MATCH" if match else "DIFFERS", len(found), len(results),
                 time.time() - t0), flush=True)
        with open("scripts/poincare_candidates.json", "w") as fh:
            json.dump(results, fh, indent=1)

    for item in first_round:
        handle(item)
    n_match = sum(1 for r in results if r["match"])
    print("first round: %d/%d match; %d distinct polynomials"
          % (n_match, len(results), len(found)), flush=True)
    for item in second_round:
        handle(item)
    n_match = sum(1 for r in results if r["match"])
    print("done: %d candidate graphs, %d matches, %d distinct polynomials"
          % (len(results), n_match, len(found)), flush=True)


if __name__ == "__main__":
    main()
