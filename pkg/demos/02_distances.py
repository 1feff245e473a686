"""
Distances between Schubert varieties
====================================

The smallest degree of a curve from X^u to X_v, computed two ways: assembled
from rank-one projections, and as the Pareto frontier of all chains of
T-invariant curves.  The two always agree, and the frontier has one element.
"""

import numpy as np

from schubdist import dist, pareto_min_degrees, weyl_group
from schubdist.distance import build_curve_graph

W = weyl_group("A3")
P = {1, 3}                                   # Gr(2,4)
graph = build_curve_graph(W, P)
print(f"curve graph of Gr(2,4): {len(graph.vertices)} fixed points, {len(graph.edges)} curves")

labels = W.enumerate_WP(P)
table = np.array([[dist(W, u, v, P).values[0] for v in labels] for u in labels])
print("dist(u, v) on Gr(2,4), rows u, columns v:")
print(table)

# Two opposite points of Gr(2,4) need a curve of degree 2.
top = labels[-1]
print("dist(point, opposite point) =", dist(W, top, W.identity, P))

# On the full flag variety of G2 degrees are vectors.  Check the whole frontier.
G = weyl_group("G2")
mismatches = sum(pareto_min_degrees(G, u, v, ()) != {dist(G, u, v, ())}
                 for u in G.elements for v in G.elements)
print("G2/B pairs where the Pareto frontier differs from dist:", mismatches)
w0 = G.longest_element()
print("dist(w0, e) on G2/B =", dist(G, w0, G.identity, ()))
