"""Exact MIN/MAX layout costs on small graphs.

Cutwidth and vertex separation minima use a dynamic program over layout
prefixes.  A prefix set ``S`` (any subset for a Graph, any downset for a
Dag) gets value::

    f(S) = max(measure(S), min over removable last vertices v of f(S - v))

where ``measure`` is the cut size (cutwidth) or boundary size (vertex
separation) and ``v`` is removable when ``S - v`` is itself a prefix set.
``f(V)`` is the optimum.  All sets of one cardinality are processed at once
with numpy; tables are indexed by bitmask, so memory grows as ``2**n``.

The maxima need no DP: every prefix set is realised by some layout, so the
largest running maximum over all layouts is the largest measure over all
prefix sets.  The bisection problems only look at prefixes of size
``n // 2`` and are solved by scanning that family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import AnyGraph, layout_with_prefix, members
from .measures import (
    ProblemKind,
    all_subset_cuts,
    boundary_sizes,
    check_kind,
    cost,
    cut_sizes,
    downset_indicator,
)

PREFIX_DP_LIMIT = 24
BISECTION_LIMIT = 26
BRUTE_FORCE_LIMIT = 9

_INF = np.int16(np.iinfo(np.int16).max)


class SolverLimitError(ValueError):
    """The instance is larger than the configured exact-solver limit."""


@dataclass(frozen=True)
class GapReport:
    """MIN and MAX of one problem on one graph, with witness layouts.

    ``gap`` is ``max_cost / min_cost``; it is ``1.0`` when both are zero and
    ``math.inf`` when only the minimum is zero.  ``exact`` is False for
    sampled estimates, whose min is an upper bound on the true MIN and whose
    max is a lower bound on the true MAX.
    """

    kind: ProblemKind
    min_cost: int
    max_cost: int
    gap: float
    min_witness: tuple[int, ...]
    max_witness: tuple[int, ...]
    exact: bool = True

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "min_cost": self.min_cost,
            "max_cost": self.max_cost,
            "gap": "inf" if math.isinf(self.gap) else self.gap,
            "min_witness": list(self.min_witness),
            "max_witness": list(self.max_witness),
            "exact": self.exact,
        }


def gap_ratio(min_cost: int, max_cost: int) -> float:
    if min_cost > 0:
        return max_cost / min_cost
    return 1.0 if max_cost == 0 else math.inf


def _limit_for(kind: ProblemKind, limit: int | None) -> int:
    if limit is not None:
        return limit
    return BISECTION_LIMIT if kind.bisection else PREFIX_DP_LIMIT


def _check(g: AnyGraph, kind: ProblemKind, limit: int | None) -> None:
    check_kind(g, kind)
    cap = _limit_for(kind, limit)
    if g.n > cap:
        raise SolverLimitError(
            f"{kind.name} exact solver is limited to n <= {cap}, got n = {g.n}"
        )
    if g.n > 31:
        raise SolverLimitError("bitmask tables support at most 31 vertices")


def masks_of_size(n: int, k: int) -> np.ndarray:
    """All ``n``-bit masks with exactly ``k`` bits set, ascending (uint32)."""
    if not 0 <= k <= n:
        return np.zeros(0, dtype=np.uint32)
    # layer[j] holds masks over the low bits processed so far with j bits set
    layer = [np.zeros(1, dtype=np.uint32)] + [np.zeros(0, dtype=np.uint32)] * k
    for bit in range(n):
        remaining = n - bit - 1
        new = []
        for j in range(k + 1):
            parts = [layer[j]]
            if j:
                parts.append(layer[j - 1] | np.uint32(1 << bit))
            arr = np.concatenate(parts)
            # prune counts that can no longer reach k
            new.append(arr if j + remaining >= k else np.zeros(0, dtype=np.uint32))
        layer = new
    return layer[k]


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.uint32)


def _measure_table(g: AnyGraph, kind: ProblemKind) -> np.ndarray:
    if kind.counts_edges:
        return all_subset_cuts(g)
    return boundary_sizes(g, _all_masks(g.n))


def _prefix_family(g: AnyGraph, kind: ProblemKind):
    """Masks and measures of every prefix set relevant to ``kind``."""
    if kind.bisection:
        masks = masks_of_size(g.n, g.n // 2)
        if g.directed:
            masks = masks[downset_indicator(g, masks)]
        values = cut_sizes(g, masks) if kind.counts_edges else boundary_sizes(g, masks)
        return masks, values
    masks = _all_masks(g.n)
    values = _measure_table(g, kind)
    if g.directed:
        keep = downset_indicator(g, masks)
        return masks[keep], values[keep]
    return masks, values


def _prefix_dp(g: AnyGraph, kind: ProblemKind) -> np.ndarray:
    n = g.n
    measure = _measure_table(g, kind)
    f = np.full(1 << n, _INF, dtype=np.int16)
    f[0] = 0
    valid = downset_indicator(g, _all_masks(n)) if g.directed else None
    popcount = np.bitwise_count(_all_masks(n))
    order = np.argsort(popcount, kind="stable")
    bounds = np.concatenate([[0], np.cumsum(np.bincount(popcount, minlength=n + 1))])
    for k in range(1, n + 1):
        layer = order[bounds[k]:bounds[k + 1]]
        best = np.full(layer.shape, _INF, dtype=np.int16)
        for v in range(n):
            bit = 1 << v
            has = (layer & bit) != 0
            sub = layer[has]
            best[has] = np.minimum(best[has], f[sub ^ bit])
        value = np.maximum(measure[layer], best)
        if valid is not None:
            value = np.where(valid[layer], value, _INF)
        f[layer] = value
    return f


def _dp_witness(f: np.ndarray, n: int) -> list[int]:
    s = (1 << n) - 1
    reverse = []
    while s:
        best_v, best_val = -1, None
        for v in members(s):
            val = f[s ^ (1 << v)]
            if val != _INF and (best_val is None or val < best_val):
                best_v, best_val = v, val
        reverse.append(best_v)
        s ^= 1 << best_v
    return reverse[::-1]


def solve_min(g: AnyGraph, kind: ProblemKind, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact minimum cost of ``kind`` on ``g`` and a layout attaining it.

    The witness is rebuilt back to front; among equally good choices for
    the last remaining position the lowest vertex index wins.
    Raises :class:`SolverLimitError` above the size limit (24 vertices for
    cutwidth/vertex separation, 26 for the bisection problems by default).
    """
    _check(g, kind, limit)
    if kind.bisection:
        masks, values = _prefix_family(g, kind)
        idx = int(np.argmin(values))
        layout = tuple(layout_with_prefix(g, int(masks[idx])))
        return int(values[idx]), layout
    f = _prefix_dp(g, kind)
    layout = tuple(_dp_witness(f, g.n))
    return int(f[-1]), layout


def solve_max(g: AnyGraph, kind: ProblemKind, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact maximum cost of ``kind`` on ``g`` and a layout attaining it."""
    _check(g, kind, limit)
    masks, values = _prefix_family(g, kind)
    idx = int(np.argmax(values))
    layout = tuple(layout_with_prefix(g, int(masks[idx])))
    return int(values[idx]), layout


def gap(g: AnyGraph, kind: ProblemKind, limit: int | None = None) -> GapReport:
    lo, lo_w = solve_min(g, kind, limit)
    hi, hi_w = solve_max(g, kind, limit)
    return GapReport(kind, lo, hi, gap_ratio(lo, hi), lo_w, hi_w, exact=True)


# -- brute force oracle ------------------------------------------------------

@lru_cache(maxsize=256)
def _brute_extremes(g: AnyGraph) -> dict[str, tuple[int, int]]:
    """Walk every valid layout and record (min, max) of all four functionals.

    Deliberately independent of the DP: prefix measures are recomputed from
    the edge list at each node of the layout tree.
    """
    n, edges, directed = g.n, g.edges, g.directed
    half = n // 2
    pred = [0] * n
    if directed:
        for u, v in edges:
            pred[v] |= 1 << u
    results = {name: [math.inf, -math.inf] for name in ("cutwidth", "vertsep", "edgebis", "vertbis")}

    def measures(s: int) -> tuple[int, int]:
        crossing = 0
        left = set()
        for u, v in edges:
            a, b = (s >> u) & 1, (s >> v) & 1
            if a and not b:
                crossing += 1
                left.add(u)
            elif b and not a and not directed:
                crossing += 1
                left.add(v)
        return crossing, len(left)

    def record(name: str, value: int) -> None:
        slot = results[name]
        slot[0] = min(slot[0], value)
        slot[1] = max(slot[1], value)

    def walk(s: int, depth: int, cw: int, vs: int, eb: int, vb: int) -> None:
        if depth == half:
            eb, vb = measures(s)
        if depth == n:
            record("cutwidth", cw)
            record("vertsep", vs)
            record("edgebis", eb)
            record("vertbis", vb)
            return
        for v in range(n):
            bit = 1 << v
            if s & bit or pred[v] & ~s:
                continue
            t, d = measures(s | bit)
            walk(s | bit, depth + 1, max(cw, t), max(vs, d), eb, vb)

    walk(0, 0, 0, 0, 0, 0)
    return {k: (int(lo), int(hi)) for k, (lo, hi) in results.items()}


def brute_force(g: AnyGraph, kind: ProblemKind, objective: str = "min") -> int:
    """Exhaustive optimum over all valid layouts (test oracle, n <= 9)."""
    check_kind(g, kind)
    if g.n > BRUTE_FORCE_LIMIT:
        raise SolverLimitError(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}, got n = {g.n}")
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    lo, hi = _brute_extremes(g)[kind.base]
    return lo if objective == "min" else hi


# -- sampling estimator ------------------------------------------------------

def random_layout(g: AnyGraph, rng: np.random.Generator) -> list[int]:
    """Uniform permutation for a Graph; for a Dag repeatedly pick a uniform
    random available source (every linear extension has positive
    probability, but the distribution is not uniform)."""
    if not g.directed:
        return rng.permutation(g.n).tolist()
    indeg = [bin(p).count("1") for p in g.pred]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop(int(rng.integers(len(ready))))
        order.append(v)
        for w in members(g.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order


def estimate_extremes(g: AnyGraph, kind: ProblemKind, samples: int, seed: int) -> GapReport:
    """Min and max cost over ``samples`` random valid layouts.

    The reported min can only overestimate the true MIN and the reported
    max can only underestimate the true MAX, so the estimated gap carries
    no one-sided guarantee; the report has ``exact=False``.
    """
    check_kind(g, kind)
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    lo = hi = None
    lo_w = hi_w = ()
    for _ in range(samples):
        layout = random_layout(g, rng)
        value = cost(g, layout, kind)
        if lo is None or value < lo:
            lo, lo_w = value, tuple(layout)
        if hi is None or value > hi:
            hi, hi_w = value, tuple(layout)
    return GapReport(kind, lo, hi, gap_ratio(lo, hi), lo_w, hi_w, exact=False)
