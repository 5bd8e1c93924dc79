"""Gamma(4,q) as a Cayley graph of a group of 5x5 unitriangular matrices.

The q^4 matrices g(t,u,v,w) act regularly on points, so the collinearity
graph is Cay(G, S) for the symmetric connection set
S = {g(t, r*t, -r*t^2, r^2*t) : t != 0}.  For odd q the group is a
nonabelian p-group: the commutator [g, g'] = g(0, 0, 2(t'u - tu'), 0).
"""

import numpy as np

from luspec import ff, graphs

q = 5
spec = ff.field_for(q)

S = graphs.connection_set(spec)
print(f"|S| = {len(S)} = q(q-1); closed under inversion:",
      all(graphs.group_inv(s) in set(S) for s in S))

g = graphs.GroupElem(*(spec.element(c) for c in (1, 2, 3, 4)))
h = graphs.GroupElem(*(spec.element(c) for c in (2, 0, 1, 3)))
print("g * h       =", tuple(x.i for x in graphs.group_mul(g, h)))
print("[g, h]      =", tuple(x.i for x in graphs.group_commutator(g, h)),
      " (central: only the third slot moves)")

# the closed-form product agrees with literal matrix multiplication
lhs = graphs.group_matrix(graphs.group_mul(g, h))
rhs = graphs.matrix_mul(graphs.group_matrix(g), graphs.group_matrix(h))
print("closed form == 5x5 product:", lhs == rhs)

# the orbit map g -> P(0,0,0,0)g is an isomorphism Cay(G,S) -> Gamma
cay = graphs.build_cayley(spec)
gam = graphs.build_gamma(spec)
sigma = graphs.cayley_vertex_map(spec)
iso = np.array_equal(np.sort(sigma[cay.neighbors], axis=1),
                     gam.neighbors[sigma])
print(f"Cay(G,S) isomorphic to Gamma(4,{q}) under the orbit map:", iso)
