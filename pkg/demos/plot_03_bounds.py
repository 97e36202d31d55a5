"""
Predicted bands and how fast they become meaningful
===================================================

The concentration results say MIN and MAX both land in a narrow band with
high probability.  The failure probability is only an upper bound, and for
small n it is larger than one.
"""

import math

from layoutgap import ProblemKind, choose_parameters, predicted_band

params = choose_parameters("edge", c=0.0, delta=0.4)
print("edge exponents:", params)

for n in (4, 10, 20, 50, 100):
    band = predicted_band(ProblemKind.CUTWIDTH, n, 0.5, params)
    fail = band.failure_bound
    shown = f"{fail:.3g}" if math.isfinite(fail) else "inf"
    print(f"n={n:3d}  band=[{band.lower_min:7.1f}, {band.upper_max:7.1f}]  failure<= {shown}")

#%%
# Vertex separation has a cap of n - 1 and a lower edge of (1 - delta) n - 1.
vparams = choose_parameters("vertex", c=0.0, delta=0.3)
for n in (30, 300, 3000):
    band = predicted_band(ProblemKind.VERTSEP, n, 0.5, vparams)
    print(f"n={n:4d}  band=[{band.lower_min:.0f}, {band.upper_max:.0f}]  log failure={band.log_failure_bound:.1f}")
