"""Ribbon graphs: rotation systems, twists, and topological metrics.

A ribbon graph is a graph plus a clockwise cyclic order of edge-ends at
every vertex, with a twist bit per edge.  That data is exactly a cellular
embedding in a closed surface, so quantities like boundary components and
Euler genus are computable by walking the edge sides.
"""

from ribbonpoly import (boundary_walks, build_ribbon_graph, medial_graph,
                        partial_petrial, subgraph_metrics, write_graph_file)

# The smallest interesting graph: one vertex, one untwisted loop.  Its
# ribbon neighbourhood is an annulus, so it has two boundary circles.
loop = build_ribbon_graph(1, [(0, 1)], [(0, 1, False)])
print("loop:", subgraph_metrics(loop))

# Giving the loop a half-twist produces a Moebius band: one boundary
# circle, nonorientable, Euler genus 1.
twisted = partial_petrial(loop, [0])
print("twisted loop:", subgraph_metrics(twisted))

# A planar theta graph: two vertices joined by three parallel edges.  In
# the plane the second vertex sees the edges in the reversed cyclic order.
theta = build_ribbon_graph(2, [(0, 2, 4), (1, 5, 3)],
                           [(0, 1, False), (2, 3, False), (4, 5, False)])
print("planar theta:", subgraph_metrics(theta))

# Keeping the same cyclic order at both vertices wraps the theta around a
# torus instead: one face, Euler genus 2.
theta_torus = build_ribbon_graph(2, [(0, 2, 4), (1, 3, 5)],
                                 [(0, 1, False), (2, 3, False), (4, 5, False)])
print("toroidal theta:", subgraph_metrics(theta_torus))

# Metrics work for any spanning subgraph: drop two theta edges and the
# remaining bridge has two faces collapsed into one disk.
print("theta, one edge kept:", subgraph_metrics(theta, [0]))

# Boundary walks are explicit: each walk lists (half-edge, side) steps.
for walk in boundary_walks(theta):
    print("boundary walk of length", len(walk), ":", walk)

# The medial graph places a degree-4 vertex on every edge; it lives in the
# same surface, and its face count is v(G) + f(G).
medial = medial_graph(theta)
print("medial of theta:", subgraph_metrics(medial))

# Graphs serialize to a plain text format that round-trips byte for byte.
print()
print(write_graph_file(theta), end="")
