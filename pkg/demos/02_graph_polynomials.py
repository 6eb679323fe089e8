"""The three polynomial invariants and their built-in cross-checks.

Every polynomial here is an exact integer state sum over the 2^e edge
subsets of a ribbon graph.  Each invariant has an independent second
route, and the two must agree:

  Tutte    via the Bollobas-Riordan specialization  vs  deletion-contraction
  Penrose  via partial-Petrial subsets              vs  medial-state tracing
  Tutte at (1,1)                                    vs  Matrix-Tree count
"""

from ribbonpoly import (bollobas_riordan, build_ribbon_graph,
                        lens_heegaard_graph, lens_params, penrose,
                        penrose_eval, penrose_via_medial_states,
                        spanning_tree_count, tutte,
                        tutte_deletion_contraction)

loop = build_ribbon_graph(1, [(0, 1)], [(0, 1, False)])
twisted = build_ribbon_graph(1, [(0, 1)], [(0, 1, True)])
bridge = build_ribbon_graph(2, [(0,), (1,)], [(0, 1, False)])

# The Bollobas-Riordan polynomial sees the embedding: the twisted loop
# picks up the nonorientability variable w and the genus variable z.
print("R(loop)         =", bollobas_riordan(loop))
print("R(twisted loop) =", bollobas_riordan(twisted))
print("R(bridge)       =", bollobas_riordan(bridge))

# Tutte is the specialization R(x, y-1, 1, 1); loops give y, bridges x.
print("T(loop)   =", tutte(loop))
print("T(bridge) =", tutte(bridge))

# The deletion-contraction recurrence never sees the embedding, so it is
# an independent oracle for the Tutte route.
g = lens_heegaard_graph(lens_params(5, 2))
T = tutte(g)
T_dc = tutte_deletion_contraction(g.vertex_count, g.underlying_edges())
print("lens(5,2): Tutte routes agree:", T == T_dc)

# At (1,1) the Tutte polynomial counts spanning trees; the Matrix-Tree
# determinant is the third, linear-algebra route to the same number.
trees = spanning_tree_count(g.vertex_count, g.underlying_edges())
print("lens(5,2): T(1,1) =", T.evaluate(x=1, y=1), "= Matrix-Tree =", trees)

# The Penrose polynomial sums (-1)^|A| L^c(A) over partial Petrials; the
# literal route smooths every medial vertex white or crossing instead.
print("P(loop) =", penrose(loop), " medial route:",
      penrose(loop) == penrose_via_medial_states(loop))

# Evaluations carry structure: P(G;1) = 0 always, and P(G;2) = 2^v for
# 4-regular graphs in orientable surfaces, exposing the vertex count.
g31 = lens_heegaard_graph(lens_params(3, 1))
print("lens(3,1): P =", penrose(g31))
print("lens(3,1): P(1) =", penrose_eval(g31, 1), " P(2) =", penrose_eval(g31, 2))
