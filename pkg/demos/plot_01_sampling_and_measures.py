"""
Sampling a random graph and measuring a layout
==============================================

A layout is just an ordering of the vertices.  Each prefix of it cuts the
graph in two, and the four layout problems look at that cut in different
ways.
"""

import numpy as np

from layoutgap import ProblemKind, cost, profile, sample_dnp, sample_gnp

# a reproducible G(n, p): one uniform draw per vertex pair, in lexicographic order
g = sample_gnp(10, 0.4, seed=7)
print(f"G(10, 0.4) with seed 7 has {g.m} edges")

# theta counts edges across each cut, delta counts left-side vertices that touch the right
layout = list(range(g.n))
prof = profile(g, layout)
print("theta:", prof.theta)
print("delta:", prof.delta)

# the four costs of this particular layout
for kind in (ProblemKind.CUTWIDTH, ProblemKind.VERTSEP, ProblemKind.EDGEBIS, ProblemKind.VERTBIS):
    print(f"{kind.value:>9}: {cost(g, layout, kind)}")

# any permutation is a valid layout of an undirected graph
rng = np.random.default_rng(0)
shuffled = rng.permutation(g.n).tolist()
print("cutwidth of a shuffled layout:", cost(g, shuffled, ProblemKind.CUTWIDTH))

#%%
# The DAG model orients every edge of the same sample from the smaller label
# to the larger, so the identity is always a valid layout.
d = sample_dnp(10, 0.4, seed=7)
assert d.edges == g.edges
print("directed cutwidth of the identity:", cost(d, layout, ProblemKind.DCUTWIDTH))
