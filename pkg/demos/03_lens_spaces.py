"""Lens spaces through their Heegaard graphs.

The lens space L(p,q) is cut out of two solid tori whose gluing traces the
circulant graph C_p(+-1,+-q) on the Heegaard torus.  L(p,q) and L(p,q')
are homeomorphic exactly when p = p' and q' lies in the orbit
{+-q^+-1} mod p, and remarkably the abstract graph alone already decides
this.  The spanning-tree count tau(p,q) = T(G;1,1) is a fast numerical
shadow of the same classification.
"""

from ribbonpoly import (circulant_isomorphic_bruteforce, lens_heegaard_graph,
                        lens_homeomorphic, lens_params, q_orbit,
                        scan_rows_to_csv, scan_tau_orbits, square_shape_check,
                        subgraph_metrics, tau)

# The Heegaard graph of L(5,2): 4-regular, p vertices, 2p edges, p faces,
# all on the torus (Euler genus 2).
params = lens_params(5, 2)
g = lens_heegaard_graph(params)
print("lens(5,2) graph:", subgraph_metrics(g))

# The orbit of q under negation and inversion mod p drives everything.
print("orbit of 2 mod 5:", q_orbit(params).members)
print("L(5,2) ~ L(5,3):", lens_homeomorphic(params, lens_params(5, 3)))
print("L(7,1) ~ L(7,2):", lens_homeomorphic(lens_params(7, 1), lens_params(7, 2)))

# For small p a brute-force bijection search over the abstract circulants
# reproduces the classification exactly.
print("C_7(+-1,+-2) ~ C_7(+-1,+-4) as graphs:",
      circulant_isomorphic_bruteforce(lens_params(7, 2), lens_params(7, 4)))

# tau(p,1) = p * 2^(p-1); the exact integer comes from the Laplacian
# cofactor determinant, cross-checked against the eigenvalue product.
print("tau(5,1) =", tau(lens_params(5, 1)))
print("tau(101,10) has", len(str(tau(lens_params(101, 10)))), "digits")

# tau always factors as p * A^2 (p odd) or (lambda/p) * B^2 (p even).
for pq in ((5, 1), (4, 1), (6, 1), (9, 2)):
    report = square_shape_check(lens_params(*pq))
    print("square shape", pq, "-> root", report.root,
          "lambda", report.lambda_mid)

# The scan groups q by orbit and watches for two orbits sharing a tau
# value; across primes none are known (and none occur up to the bound).
rows, collisions = scan_tau_orbits(12)
print(scan_rows_to_csv(rows), end="")
print("collisions:", collisions if collisions else "none")
