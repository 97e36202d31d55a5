"""Seeded samplers for G(n, p) and D(n, p).

Reproducibility contract
------------------------
* Generator: numpy's ``PCG64`` bit generator seeded with the 64-bit seed
  (``numpy.random.Generator(PCG64(seed))``).  Its output stream is fixed
  across numpy versions and platforms.
* Pair order: the ``n(n-1)/2`` vertex pairs ``(i, j)``, ``i < j``, in
  ascending lexicographic order (``(0,1), (0,2), ..., (n-2,n-1)``).
* One uniform draw ``u`` in ``[0, 1)`` per pair; the pair is an edge iff
  ``u < p``.

D(n, p) consumes exactly the same stream and orients every edge from the
smaller to the larger label, so ``sample_dnp(n, p, s)`` is the orientation
of ``sample_gnp(n, p, s)``.

Derived seeds (:func:`derive_seed`) come from ``numpy.random.SeedSequence``
with the master seed as entropy and the integer keys as spawn key.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Dag, Graph

SEED_BOUND = 1 << 64


def _check_seed(seed: int) -> int:
    if int(seed) != seed or not 0 <= seed < SEED_BOUND:
        raise ValueError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


def _check_p(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    return float(p)


def derive_seed(master_seed: int, *keys: int) -> int:
    """Deterministic 64-bit child seed for ``(master_seed, *keys)``."""
    ss = np.random.SeedSequence(entropy=_check_seed(master_seed), spawn_key=tuple(int(k) for k in keys))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column arrays of all pairs ``i < j`` in lexicographic order."""
    return np.triu_indices(n, 1)


def pair_indicators(n: int, p: float, seed: int) -> np.ndarray:
    """Boolean edge indicator for every pair of :func:`pair_index` order."""
    p = _check_p(p)
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.Generator(np.random.PCG64(_check_seed(seed)))
    return rng.random(n * (n - 1) // 2) < p


def _edges(n: int, p: float, seed: int) -> list[tuple[int, int]]:
    keep = pair_indicators(n, p, seed)
    rows, cols = pair_index(n)
    return list(zip(rows[keep].tolist(), cols[keep].tolist()))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Undirected G(n, p) graph; each pair is an edge independently with probability p."""
    return Graph(n, tuple(_edges(n, p, seed)))


def sample_dnp(n: int, p: float, seed: int) -> Dag:
    """D(n, p): a G(n, p) sample with every edge oriented from lower to higher label."""
    return Dag(n, tuple(_edges(n, p, seed)))


@dataclass(frozen=True)
class SparsitySchedule:
    """Edge probability ``p_n = min(1, K * n**-c)``."""

    K: float = 1.0
    c: float = 0.0

    def __post_init__(self):
        if not self.K > 0:
            raise ValueError(f"schedule scale K must be positive, got {self.K!r}")
        if not self.c >= 0:
            raise ValueError(f"schedule exponent c must be non-negative, got {self.c!r}")

    def p(self, n: int) -> float:
        return schedule_p(self, n)


def schedule_p(sched: SparsitySchedule, n: int) -> float:
    if n < 1:
        raise ValueError("n must be at least 1")
    return min(1.0, sched.K * float(n) ** (-sched.c))
