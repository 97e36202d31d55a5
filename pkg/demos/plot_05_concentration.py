"""
How tightly one cut concentrates
================================

Fix the first half of the vertices.  Over many samples of G(n, p) the
number of edges leaving it is binomial, and Hoeffding's inequality bounds
its tails.
"""

from layoutgap import ConcentrationConfig, run_concentration_experiment, run_hoeffding_check

rep = run_concentration_experiment(ConcentrationConfig(n=40, p=0.3, samples=5000, master_seed=1))
print(f"{rep.pairs} crossing pairs, mean {rep.mean:.2f} (expected {rep.mu:.1f}, se {rep.std_error:.3f})")
for t in rep.tails:
    print(f"eps={t.eps:<5} lower={t.lower_freq:.4f} upper={t.upper_freq:.4f} bound={t.bound:.4f}")

#%%
# The same comparison for a plain sum of coin flips.
for t in run_hoeffding_check(n=200, p=0.5, samples=20_000, seed=3):
    print(f"eps={t.eps:<5} tails={t.lower_freq:.4f}/{t.upper_freq:.4f}  exp(-2 eps^2 n)={t.bound:.4f}")
