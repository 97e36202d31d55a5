"""Layout cost functionals.

For a layout and a cut position ``i`` the left set is the first ``i``
vertices of the layout.  ``theta`` counts edges leaving the left set and
``delta`` counts left vertices with at least one neighbour on the right.
For a DAG only out-edges are counted; on valid layout prefixes this agrees
with the undirected count because no edge points back into the prefix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import AnyGraph, as_mask, is_valid_layout, members


class ProblemKind(enum.Enum):
    CUTWIDTH = "cutwidth"
    VERTSEP = "vertsep"
    EDGEBIS = "edgebis"
    VERTBIS = "vertbis"
    DCUTWIDTH = "dcutwidth"
    DVERTSEP = "dvertsep"
    DEDGEBIS = "dedgebis"
    DVERTBIS = "dvertbis"

    @property
    def directed(self) -> bool:
        return self.value.startswith("d")

    @property
    def base(self) -> str:
        """Undirected problem name: cutwidth, vertsep, edgebis or vertbis."""
        return self.value[1:] if self.directed else self.value

    @property
    def counts_edges(self) -> bool:
        return self.base in ("cutwidth", "edgebis")

    @property
    def bisection(self) -> bool:
        return self.base in ("edgebis", "vertbis")

    @property
    def family(self) -> str:
        return "edge" if self.counts_edges else "vertex"

    @classmethod
    def of(cls, name: str, directed: bool) -> "ProblemKind":
        name = name.lower()
        if name not in _BASES:
            raise ValueError(f"unknown problem {name!r}; expected one of {', '.join(_BASES)}")
        return cls("d" + name if directed else name)


_BASES = ("cutwidth", "vertsep", "edgebis", "vertbis")


def check_kind(g: AnyGraph, kind: ProblemKind) -> None:
    if kind.directed != g.directed:
        want = "Dag" if kind.directed else "Graph"
        raise ValueError(f"{kind.name} requires a {want} input")


@dataclass(frozen=True)
class CostProfile:
    """theta and delta at every cut position ``0..n``."""

    theta: tuple[int, ...]
    delta: tuple[int, ...]


def cut_size(g: AnyGraph, s: Iterable[int] | int) -> int:
    """Edges leaving ``s``; for a DAG only edges ``u -> v`` with ``u`` in ``s``."""
    mask = as_mask(g, s)
    return sum(bin(g.succ[u] & ~mask).count("1") for u in members(mask))


def boundary_size(g: AnyGraph, s: Iterable[int] | int) -> int:
    """Vertices of ``s`` with a neighbour (out-neighbour for a DAG) outside ``s``."""
    mask = as_mask(g, s)
    return sum(1 for u in members(mask) if g.succ[u] & ~mask)


def _prefix_mask(g: AnyGraph, layout: Sequence[int], i: int) -> int:
    if not is_valid_layout(g, layout):
        raise ValueError("invalid layout for this graph")
    if not 0 <= i <= g.n:
        raise ValueError(f"cut position must lie in 0..{g.n}")
    mask = 0
    for v in layout[:i]:
        mask |= 1 << v
    return mask


def theta(g: AnyGraph, layout: Sequence[int], i: int) -> int:
    return cut_size(g, _prefix_mask(g, layout, i))


def delta(g: AnyGraph, layout: Sequence[int], i: int) -> int:
    return boundary_size(g, _prefix_mask(g, layout, i))


def profile(g: AnyGraph, layout: Sequence[int]) -> CostProfile:
    if not is_valid_layout(g, layout):
        raise ValueError("invalid layout for this graph")
    th, de = [0], [0]
    mask = 0
    for v in layout:
        mask |= 1 << v
        th.append(cut_size(g, mask))
        de.append(boundary_size(g, mask))
    return CostProfile(tuple(th), tuple(de))


def cost(g: AnyGraph, layout: Sequence[int], kind: ProblemKind) -> int:
    """Value of the layout under ``kind``.

    Cutwidth and vertex separation take the maximum over all cut positions;
    the bisection problems read the single position ``n // 2``.
    """
    check_kind(g, kind)
    prof = profile(g, layout)
    values = prof.theta if kind.counts_edges else prof.delta
    if kind.bisection:
        return values[g.n // 2]
    return max(values)


# -- vectorised evaluation over many vertex sets -----------------------------

def _out_masks(g: AnyGraph) -> np.ndarray:
    return np.array(g.succ, dtype=np.uint32)


def cut_sizes(g: AnyGraph, masks: np.ndarray) -> np.ndarray:
    """:func:`cut_size` for every bitmask in ``masks`` (int16 result)."""
    masks = np.asarray(masks, dtype=np.uint32)
    out = np.zeros(masks.shape, dtype=np.int16)
    outside = ~masks
    for u, nb in enumerate(_out_masks(g)):
        if not nb:
            continue
        inside = ((masks >> np.uint32(u)) & np.uint32(1)).astype(bool)
        out += np.where(inside, np.bitwise_count(outside & nb), 0).astype(np.int16)
    return out


def boundary_sizes(g: AnyGraph, masks: np.ndarray) -> np.ndarray:
    """:func:`boundary_size` for every bitmask in ``masks`` (int16 result)."""
    masks = np.asarray(masks, dtype=np.uint32)
    out = np.zeros(masks.shape, dtype=np.int16)
    outside = ~masks
    for u, nb in enumerate(_out_masks(g)):
        if not nb:
            continue
        inside = ((masks >> np.uint32(u)) & np.uint32(1)).astype(bool)
        out += (inside & ((outside & nb) != 0)).astype(np.int16)
    return out


def all_subset_cuts(g: AnyGraph) -> np.ndarray:
    """Cut size of every subset, indexed by bitmask, built by doubling.

    Adding vertex ``v`` to a set ``S`` of lower-indexed vertices gains its
    out-edges to the complement and loses the edges from ``S`` into ``v``.
    """
    n = g.n
    cuts = np.zeros(1 << n, dtype=np.int16)
    for v in range(n):
        size = 1 << v
        low = np.arange(size, dtype=np.uint32)
        if g.directed:
            out_nb, in_nb = np.uint32(g.succ[v]), np.uint32(g.pred[v])
            gain = (bin(g.succ[v]).count("1")
                    - np.bitwise_count(low & out_nb).astype(np.int16)
                    - np.bitwise_count(low & in_nb).astype(np.int16))
        else:
            nb = np.uint32(g.adj[v])
            gain = bin(g.adj[v]).count("1") - 2 * np.bitwise_count(low & nb).astype(np.int16)
        cuts[size:2 * size] = cuts[:size] + gain
    return cuts


def downset_indicator(g: AnyGraph, masks: np.ndarray) -> np.ndarray:
    """Boolean array: is each bitmask a downset (always true for a Graph)."""
    masks = np.asarray(masks, dtype=np.uint32)
    ok = np.ones(masks.shape, dtype=bool)
    if not g.directed:
        return ok
    outside = ~masks
    for v, pr in enumerate(g.pred):
        if not pr:
            continue
        inside = ((masks >> np.uint32(v)) & np.uint32(1)).astype(bool)
        ok &= ~(inside & ((outside & np.uint32(pr)) != 0))
    return ok
