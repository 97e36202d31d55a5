"""
Exact MIN and MAX by prefix dynamic programming
===============================================

Below about 24 vertices every problem can be solved exactly.  The solver
walks subsets of vertices as layout prefixes, so it never enumerates the
n! orderings themselves.
"""

import time

from layoutgap import ProblemKind, brute_force, gap, sample_gnp, solve_min

g = sample_gnp(8, 0.5, seed=1)

# the brute-force oracle and the DP agree
for kind in (ProblemKind.CUTWIDTH, ProblemKind.VERTSEP):
    value, witness = solve_min(g, kind)
    print(f"{kind.value}: dp={value} brute={brute_force(g, kind, 'min')} witness={witness}")

#%%
# The gap is MAX over MIN.  Watch it shrink as graphs get larger.
for n in (8, 12, 16, 20):
    g = sample_gnp(n, 0.5, seed=n)
    start = time.perf_counter()
    rep = gap(g, ProblemKind.CUTWIDTH)
    took = time.perf_counter() - start
    print(f"n={n:2d}  min={rep.min_cost:3d}  max={rep.max_cost:3d}  gap={rep.gap:.3f}  ({took:.2f}s)")
