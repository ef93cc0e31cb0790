"""Temporal graph model, window intersections, and degree primitives.

Vertices are dense integers 1..n.  Edges are unordered pairs stored as
(min, max) tuples.  TemporalGraph and StaticGraph are immutable after
construction; IntersectionView is a mutable cursor owned by one caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TimeWindow:
    """Closed interval [a, b] of layer indices, 1-based."""

    a: int
    b: int

    def __post_init__(self):
        if not (1 <= self.a <= self.b):
            raise ValueError(f"invalid window [{self.a}, {self.b}]")

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    def layers(self) -> range:
        return range(self.a, self.b + 1)


class StaticGraph:
    """Simple undirected graph with adjacency-set lookup."""

    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[Edge]):
        if vertex_count < 0:
            raise ValueError("negative vertex count")
        self.vertex_count = vertex_count
        normed = set()
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            u, v = norm_edge(u, v)
            if not (1 <= u and v <= vertex_count):
                raise ValueError(f"edge ({u},{v}) outside vertex range")
            normed.add((u, v))
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self.edges = frozenset(normed)
        self._adj = adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj.get(v, ()))

    def adjacency(self) -> dict[int, set[int]]:
        """Copy of the adjacency map (only vertices with degree > 0)."""
        return {v: set(ns) for v, ns in self._adj.items()}

    def degree(self, v: int) -> int:
        return len(self._adj.get(v, ()))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StaticGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"StaticGraph(n={self.vertex_count}, m={len(self.edges)})"


class TemporalGraph:
    """Fixed vertex set with an ordered sequence of layer edge sets.

    `labels` optionally maps dense ids back to original dataset labels
    (index 0 unused).  `lifetime_s` carries the raw-data lifetime in
    seconds when the graph came from a contact list.
    """

    __slots__ = ("vertex_count", "layers", "labels", "lifetime_s", "_adj")

    def __init__(
        self,
        vertex_count: int,
        layers: Sequence[Iterable[Edge]],
        labels: Optional[Sequence[str]] = None,
        lifetime_s: Optional[int] = None,
    ):
        if vertex_count < 0:
            raise ValueError("negative vertex count")
        if len(layers) < 1:
            raise ValueError("temporal graph needs at least one layer")
        normed_layers = []
        adj_layers = []
        for layer in layers:
            edges = set()
            adj: dict[int, set[int]] = {}
            for u, v in layer:
                u, v = norm_edge(u, v)
                if not (1 <= u and v <= vertex_count):
                    raise ValueError(f"edge ({u},{v}) outside vertex range")
                edges.add((u, v))
                adj.setdefault(u, set()).add(v)
                adj.setdefault(v, set()).add(u)
            normed_layers.append(frozenset(edges))
            adj_layers.append(adj)
        self.vertex_count = vertex_count
        self.layers = tuple(normed_layers)
        self._adj = adj_layers
        self.labels = tuple(labels) if labels is not None else None
        self.lifetime_s = lifetime_s

    @property
    def tau(self) -> int:
        return len(self.layers)

    @property
    def num_time_edges(self) -> int:
        return sum(len(e) for e in self.layers)

    def layer_edges(self, i: int) -> frozenset[Edge]:
        self._check_layer(i)
        return self.layers[i - 1]

    def layer_adj(self, i: int, v: int) -> set[int]:
        """Neighbors of v in layer i (may be empty)."""
        self._check_layer(i)
        return self._adj[i - 1].get(v, set())

    def layer_degree(self, i: int, v: int) -> int:
        self._check_layer(i)
        return len(self._adj[i - 1].get(v, ()))

    def layer_graph(self, i: int) -> StaticGraph:
        return StaticGraph(self.vertex_count, self.layer_edges(i))

    def check_window(self, w: TimeWindow) -> None:
        if w.b > self.tau:
            raise ValueError(f"window [{w.a},{w.b}] exceeds lifetime {self.tau}")

    def _check_layer(self, i: int) -> None:
        if not (1 <= i <= self.tau):
            raise ValueError(f"layer {i} out of range 1..{self.tau}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TemporalGraph)
            and self.vertex_count == other.vertex_count
            and self.layers == other.layers
        )

    def __hash__(self):
        return hash((self.vertex_count, self.layers))

    def __repr__(self):
        return (
            f"TemporalGraph(n={self.vertex_count}, tau={self.tau}, "
            f"te={self.num_time_edges})"
        )


def delta_union_transform(tg: TemporalGraph, delta: int) -> TemporalGraph:
    """Collapse each run of delta+1 consecutive layers into their union.

    The output has tau - delta layers; layer i is the union of input
    layers i..i+delta.  delta=0 is the identity.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if delta >= tg.tau:
        raise ValueError("window exceeds lifetime")
    if delta == 0:
        return tg
    layers = [
        frozenset().union(*tg.layers[i : i + delta + 1])
        for i in range(tg.tau - delta)
    ]
    return TemporalGraph(tg.vertex_count, layers, labels=tg.labels,
                         lifetime_s=tg.lifetime_s)


def intersection_graph(tg: TemporalGraph, w: TimeWindow) -> StaticGraph:
    """Static graph whose edges appear in every layer of the window."""
    tg.check_window(w)
    edges = tg.layers[w.a - 1]
    for i in range(w.a, w.b):
        edges = edges & tg.layers[i]
        if not edges:
            break
    return StaticGraph(tg.vertex_count, edges)


class IntersectionView:
    """Incrementally maintained intersection graph over a growing window.

    Starts at [a, a]; extend() advances the right endpoint by one layer,
    removing edges no longer common to every layer.
    """

    __slots__ = ("base", "a", "b", "edges", "_adj")

    def __init__(self, base: TemporalGraph, a: int):
        base._check_layer(a)
        self.base = base
        self.a = a
        self.b = a
        self.edges: set[Edge] = set(base.layers[a - 1])
        self._adj: dict[int, set[int]] = {}
        for u, v in self.edges:
            self._adj.setdefault(u, set()).add(v)
            self._adj.setdefault(v, set()).add(u)

    @property
    def window(self) -> TimeWindow:
        return TimeWindow(self.a, self.b)

    def extend(self) -> "IntersectionView":
        if self.b >= self.base.tau:
            raise ValueError("at lifetime end")
        self.b += 1
        nxt = self.base.layers[self.b - 1]
        removed = [e for e in self.edges if e not in nxt]
        for u, v in removed:
            self.edges.discard((u, v))
            self._adj[u].discard(v)
            self._adj[v].discard(u)
        return self

    def neighbors(self, v: int) -> set[int]:
        return self._adj.get(v, set())

    def degree(self, v: int) -> int:
        return len(self._adj.get(v, ()))

    def active_vertices(self) -> list[int]:
        """Vertices with degree >= 1 in the current intersection."""
        return sorted(v for v, ns in self._adj.items() if ns)

    def graph(self) -> StaticGraph:
        return StaticGraph(self.base.vertex_count, self.edges)


def extend_intersection(view: IntersectionView) -> IntersectionView:
    return view.extend()


def outdeg_vertex(g: StaticGraph, v: int, members: frozenset[int] | set[int]) -> int:
    """Number of edges from v to vertices outside `members`; v must be a member."""
    if v not in members:
        raise ValueError(f"vertex {v} not in the set")
    return sum(1 for u in g.neighbors(v) if u not in members)


def outdeg_set(g: StaticGraph, members: frozenset[int] | set[int]) -> int:
    return sum(outdeg_vertex(g, v, members) for v in members)


def min_degree_in_set(g: StaticGraph, members: Iterable[int]) -> int:
    degs = [g.degree(v) for v in members]
    if not degs:
        raise ValueError("empty vertex set")
    return min(degs)


def is_clique_in_layer(tg: TemporalGraph, members, i: int) -> bool:
    mset = set(members)
    for v in mset:
        if not (mset - {v}) <= tg.layer_adj(i, v):
            return False
    return True


def is_temporal_clique(tg: TemporalGraph, members, w: TimeWindow) -> bool:
    """True iff `members` (size >= 2) is a clique in every layer of the window."""
    if len(set(members)) < 2:
        raise ValueError("temporal cliques have at least two vertices")
    tg.check_window(w)
    return all(is_clique_in_layer(tg, members, i) for i in w.layers())
