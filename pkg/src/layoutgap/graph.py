"""Undirected graphs, DAGs, layouts and downsets.

Vertices are the integers ``0..n-1``.  A layout is any sequence holding every
vertex exactly once; position ``k`` of the sequence corresponds to the
1-based position ``k + 1`` of the usual linear-arrangement notation.

Vertex sets are passed around as iterables of indices at the public surface
and as integer bitmasks internally (bit ``v`` set means ``v`` is a member).
"""

from __future__ import annotations

import graphlib
import heapq
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import ClassVar, Iterable, Iterator, Sequence, Union

# Downset enumeration keeps whole cardinality layers in memory.
DOWNSET_LIMIT = 24


class GraphFormatError(ValueError):
    """Raised for malformed graph files."""


class CycleError(ValueError):
    """Raised when a DAG edge list contains a directed cycle.

    ``edge`` is one edge ``(u, v)`` lying on the detected cycle.
    """

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"edge list contains a cycle through edge {edge[0]}->{edge[1]}")
        self.edge = edge


def _check_pairs(n: int, pairs) -> list[tuple[int, int]]:
    if int(n) != n or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    out = []
    for pair in pairs:
        u, v = pair
        if int(u) != u or int(v) != v:
            raise ValueError(f"non-integer endpoint in edge {pair!r}")
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        out.append((u, v))
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``, deduplicated
    and in ascending order, so equal graphs compare and hash equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    directed: ClassVar[bool] = False

    def __post_init__(self):
        pairs = _check_pairs(self.n, self.edges)
        norm = sorted({(min(u, v), max(u, v)) for u, v in pairs})
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    # Uniform accessors shared with Dag: for an undirected graph both
    # directions see the full neighbourhood.
    @property
    def succ(self) -> tuple[int, ...]:
        return self.adj

    @property
    def pred(self) -> tuple[int, ...]:
        return tuple(0 for _ in range(self.n))

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])


@dataclass(frozen=True)
class Dag:
    """Directed acyclic graph; an edge ``(u, v)`` means ``u -> v``.

    Acyclicity is checked on construction and a :class:`CycleError` names
    one edge of an offending cycle.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    directed: ClassVar[bool] = True

    def __post_init__(self):
        pairs = sorted(set(_check_pairs(self.n, self.edges)))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(pairs))
        _assert_acyclic(self.n, pairs)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def succ(self) -> tuple[int, ...]:
        """Out-neighbourhood bitmask of every vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        """In-neighbourhood bitmask of every vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        return tuple(s | p for s, p in zip(self.succ, self.pred))

    def to_undirected(self) -> Graph:
        return Graph(self.n, self.edges)


AnyGraph = Union[Graph, Dag]


def _assert_acyclic(n: int, pairs: list[tuple[int, int]]) -> None:
    sorter = graphlib.TopologicalSorter({v: () for v in range(n)})
    for u, v in pairs:
        sorter.add(v, u)
    try:
        sorter.prepare()
    except graphlib.CycleError as exc:
        cycle = exc.args[1]
        edge_set = set(pairs)
        for a, b in zip(cycle, cycle[1:]):
            if (a, b) in edge_set:
                raise CycleError((a, b)) from None
            if (b, a) in edge_set:
                raise CycleError((b, a)) from None
        raise  # pragma: no cover


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build an undirected graph, dropping duplicate edges.

    Raises ``ValueError`` on self-loops or out-of-range endpoints.

    >>> make_graph(4, [(0, 1), (1, 0)]).edges
    ((0, 1),)
    """
    return Graph(n, tuple(edges))


def make_dag(n: int, edges: Iterable[tuple[int, int]] = ()) -> Dag:
    """Build a DAG; raises :class:`CycleError` if the edges contain a cycle."""
    return Dag(n, tuple(edges))


# -- bitmask helpers ---------------------------------------------------------

def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for v in vertices:
        if v < 0 or (n is not None and v >= n):
            raise ValueError(f"vertex {v} outside universe 0..{n - 1}")
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def as_mask(g: AnyGraph, s: Iterable[int] | int) -> int:
    """Accept a vertex iterable or a ready bitmask and return the bitmask."""
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise ValueError(f"bitmask {s:#x} outside universe of {g.n} vertices")
        return s
    return to_mask(s, g.n)


# -- layouts -----------------------------------------------------------------

def is_valid_layout(g: AnyGraph, layout: Sequence[int]) -> bool:
    """True iff ``layout`` is a permutation of the vertices (topological for a Dag).

    A length different from ``g.n`` is a caller error and raises ``ValueError``.
    """
    if len(layout) != g.n:
        raise ValueError(f"layout has length {len(layout)}, graph has {g.n} vertices")
    position = [-1] * g.n
    for k, v in enumerate(layout):
        if not (0 <= v < g.n) or position[v] != -1:
            return False
        position[v] = k
    if g.directed:
        return all(position[u] < position[v] for u, v in g.edges)
    return True


def topological_order(d: AnyGraph, within: int | None = None) -> list[int]:
    """Lowest-index-first topological order of the vertices in ``within``.

    Only constraints between members of ``within`` are considered, so a
    downset followed by its complement yields a valid full layout.
    """
    full = (1 << d.n) - 1
    within = full if within is None else within
    pred = [p & within for p in d.pred]
    indeg = {v: bin(pred[v]).count("1") for v in members(within)}
    heap = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in members(d.succ[u] & within):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order


def layout_with_prefix(g: AnyGraph, prefix: Iterable[int] | int) -> list[int]:
    """A valid layout whose first ``|prefix|`` vertices are exactly ``prefix``.

    For a Dag the prefix must be a downset.
    """
    mask = as_mask(g, prefix)
    if g.directed and not is_downset(g, mask):
        raise ValueError("prefix of a DAG layout must be a downset")
    full = (1 << g.n) - 1
    if not g.directed:
        return members(mask) + members(full & ~mask)
    return topological_order(g, mask) + topological_order(g, full & ~mask)


# -- downsets ----------------------------------------------------------------

def is_downset(d: AnyGraph, s: Iterable[int] | int) -> bool:
    """True iff no edge ``u -> v`` has ``v`` in ``s`` and ``u`` outside it."""
    mask = as_mask(d, s)
    for v in members(mask):
        if d.pred[v] & ~mask:
            return False
    return True


def _downset_layers(d: AnyGraph, stop: int) -> Iterator[list[int]]:
    layer = [0]
    yield layer
    for _ in range(stop):
        nxt = set()
        for s in layer:
            for v in range(d.n):
                bit = 1 << v
                if not s & bit and d.pred[v] & ~s == 0:
                    nxt.add(s | bit)
        layer = sorted(nxt)
        yield layer


def enumerate_downsets(
    d: AnyGraph, size: int | None = None, limit: int = DOWNSET_LIMIT
) -> Iterator[frozenset[int]]:
    """Yield every downset of ``d`` exactly once, smallest cardinality first.

    Each layer of size ``k + 1`` is built by adding one minimal remaining
    vertex to a size ``k`` downset.  With ``size`` given only that layer is
    produced.  An undirected graph has no order constraints, so every
    subset is yielded.
    """
    if d.n > limit:
        raise ValueError(f"downset enumeration limited to n <= {limit}, got n = {d.n}")
    if size is not None and not 0 <= size <= d.n:
        raise ValueError(f"size must lie in 0..{d.n}")
    stop = d.n if size is None else size
    for k, layer in enumerate(_downset_layers(d, stop)):
        if size is None or k == size:
            for s in layer:
                yield frozenset(members(s))


# -- file format -------------------------------------------------------------

def write_graph_file(g: AnyGraph) -> str:
    """Serialise ``g`` to the text graph format."""
    kind = "dag" if g.directed else "ugraph"
    lines = [f"{kind} {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_file(text: str) -> AnyGraph:
    """Parse the text graph format.

    Lines starting with ``#`` and blank lines are ignored.  The header is
    ``<kind> <n> <m>`` with kind ``ugraph`` or ``dag``, followed by exactly
    ``m`` lines ``<u> <v>`` of 0-based endpoints.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing header line")
    header = lines[0].split()
    if len(header) != 3:
        raise GraphFormatError(f"malformed header {lines[0]!r}")
    kind, n_tok, m_tok = header
    if kind not in ("ugraph", "dag"):
        raise GraphFormatError(f"unknown graph kind {kind!r}")
    try:
        n, m = int(n_tok), int(m_tok)
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"malformed header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        try:
            if len(parts) != 2:
                raise ValueError
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"malformed edge line {ln!r}") from None
    try:
        return make_dag(n, edges) if kind == "dag" else make_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def read_graph(path: str | Path) -> AnyGraph:
    return parse_graph_file(Path(path).read_text(encoding="utf-8"))


def write_graph(g: AnyGraph, path: str | Path) -> None:
    Path(path).write_text(write_graph_file(g), encoding="utf-8", newline="\n")
