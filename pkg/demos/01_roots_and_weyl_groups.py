"""
Root systems and Weyl groups
============================

Build a root system from its Cartan type, look at roots and coroots, and walk
through the Weyl group: lengths, Bruhat order and parabolic quotients W^P.
"""

import numpy as np

from schubdist import build_root_system, weyl_group

# G2 is the smallest system where roots and coroots look different.
rs = build_root_system("G2")
print("Cartan matrix of G2 (a_ij = <alpha_j, alpha_i^vee>):")
print(np.array(rs.cartan_matrix))
for alpha in rs.positive_roots:
    print(f"  root {alpha}   coroot {rs.coroot(alpha)}")

# Elements print as canonical reduced words.
W = weyl_group("A3")
print("\n|W(A3)| =", W.order(), "  w0 =", W.longest_element())

# The Grassmannian Gr(2,4) is A3 modulo the parabolic generated by s1 and s3.
grass = W.enumerate_WP({1, 3})
print("W^P for Gr(2,4):", [str(w) for w in grass])

# Bruhat order on W^P as an incidence matrix.  Rows and columns follow the
# sorted order above, so the matrix is upper unitriangular.
incidence = np.array([[int(W.bruhat_leq(u, v)) for v in grass] for u in grass])
print(incidence)

# dual(v) = min_rep(w0 v) turns the Schubert basis into the opposite basis.
print("dual:", {str(v): str(W.dual(v, {1, 3})) for v in grass})
