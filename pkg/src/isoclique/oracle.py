"""Exponential reference implementation used as ground truth.

Enumerates every vertex subset and window directly from the isolation
definitions, then filters by maximality semantics re-implemented
independently of the fast search.  Covers all six isolation kinds,
including usually-max which the fast enumerator refuses.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import TemporalGraph, TimeWindow, is_temporal_clique
from .isolation import (
    ALLTIME_AVG,
    ALLTIME_MAX,
    AVG_ALLTIME,
    MAX_USUALLY,
    USUALLY_AVG,
    USUALLY_MAX,
    IsolationSpec,
)
from .results import ResultSet, TemporalClique

DEFAULT_VERTEX_CAP = 16
DEFAULT_TAU_CAP = 8
SUBSET_CAP = 20

_ALLTIME_KINDS = (ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME)


class OracleCapsExceeded(ValueError):
    pass


def _aggregates(tg, vertices, a, b):
    """Six integer aggregates of the outdegree matrix of a clique, enough
    to decide every isolation kind for any c."""
    off = len(vertices) - 1
    rows = [
        [tg.layer_degree(i, v) - off for i in range(a, b + 1)] for v in vertices
    ]
    cols = list(zip(*rows))
    return (
        max(sum(col) for col in cols),        # worst layer total
        max(max(row) for row in rows),        # worst single entry
        sum(max(row) for row in rows),        # per-vertex peaks, summed
        max(sum(row) for row in rows),        # busiest vertex total
        sum(sum(row) for row in rows),        # grand total
        sum(max(col) for col in cols),        # per-layer peaks, summed
    )


def _passes(kind, c, size, length, agg) -> bool:
    worst_layer, worst_entry, peak_sum, busiest, total, layer_peaks = agg
    if kind == ALLTIME_AVG:
        return worst_layer < c * size
    if kind == ALLTIME_MAX:
        return worst_entry < c
    if kind == AVG_ALLTIME:
        return peak_sum < c * size
    if kind == MAX_USUALLY:
        return busiest < c * length
    if kind == USUALLY_AVG:
        return total < c * size * length
    if kind == USUALLY_MAX:
        return layer_peaks < c * length
    raise AssertionError(kind)


def _all_cliques(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Every clique with >= 2 vertices in the graph given by `adj`."""
    out: list[frozenset[int]] = []

    def grow(base: tuple[int, ...], cands: list[int]) -> None:
        for idx, v in enumerate(cands):
            cur = base + (v,)
            if len(cur) >= 2:
                out.append(frozenset(cur))
            nxt = [u for u in cands[idx + 1 :] if u in adj[v]]
            if nxt:
                grow(cur, nxt)

    grow((), sorted(adj))
    return out


class OracleIndex:
    """Precomputed table of every temporal clique of a small graph,
    shareable across isolation kinds and parameters."""

    def __init__(
        self,
        tg: TemporalGraph,
        *,
        vertex_cap: int = DEFAULT_VERTEX_CAP,
        tau_cap: int = DEFAULT_TAU_CAP,
    ):
        if tg.vertex_count > vertex_cap or tg.tau > tau_cap:
            raise OracleCapsExceeded("instance too large for oracle")
        self.tg = tg
        # (vertices, a, b) -> aggregates; plus a per-window member index
        self.table: dict[tuple[tuple[int, ...], int, int], tuple] = {}
        self.by_window: dict[tuple[int, int], list[frozenset[int]]] = {}
        for a in range(1, tg.tau + 1):
            edges = set(tg.layers[a - 1])
            for b in range(a, tg.tau + 1):
                if b > a:
                    edges &= tg.layers[b - 1]
                if not edges:
                    break
                adj: dict[int, set[int]] = {}
                for u, v in edges:
                    adj.setdefault(u, set()).add(v)
                    adj.setdefault(v, set()).add(u)
                cliques = _all_cliques(adj)
                self.by_window[(a, b)] = cliques
                for cq in cliques:
                    vs = tuple(sorted(cq))
                    self.table[(vs, a, b)] = _aggregates(tg, vs, a, b)

    def is_temporal_clique(self, members: frozenset[int], a: int, b: int) -> bool:
        return (tuple(sorted(members)), a, b) in self.table

    def isolated_cliques(self, spec: IsolationSpec) -> ResultSet:
        """Every spec-isolated temporal clique, maximal or not."""
        rs = ResultSet()
        for (vs, a, b), agg in self.table.items():
            if _passes(spec.kind, spec.c, len(vs), b - a + 1, agg):
                rs.add(TemporalClique(a, b, vs))
        return rs

    def enumerate(self, spec: IsolationSpec) -> ResultSet:
        """All maximal spec-isolated temporal cliques."""
        iso = self.isolated_cliques(spec)
        by_members: dict[frozenset[int], list[tuple[int, int]]] = {}
        for tc in iso:
            by_members.setdefault(tc.member_set, []).append((tc.a, tc.b))

        def superset_isolated(members, a, b):
            return any(
                len(other) > len(members) and other > members
                for other in iso.in_window(a, b)
            )

        final = ResultSet()
        for tc in iso:
            members = tc.member_set
            if spec.kind in _ALLTIME_KINDS:
                if superset_isolated(members, tc.a, tc.b):
                    continue
                # no same-members isolated clique on a strictly larger window
                if any(
                    (a2, b2) != (tc.a, tc.b) and a2 <= tc.a and b2 >= tc.b
                    for a2, b2 in by_members[members]
                ):
                    continue
                final.add(tc)
            else:
                # usually kinds: scan every window containing [a, b] on
                # which the members stay a clique; reject on an isolated
                # superwindow or a strict superset anywhere in the scan
                if self._usually_maximal(spec, members, tc.a, tc.b, iso):
                    final.add(tc)
        return final

    def _usually_maximal(self, spec, members, a, b, iso) -> bool:
        key_vs = tuple(sorted(members))
        for a2 in range(a, 0, -1):
            if not self.is_temporal_clique(members, a2, b):
                break
            for b2 in range(b, self.tg.tau + 1):
                if not self.is_temporal_clique(members, a2, b2):
                    break
                if (a2, b2) != (a, b) and _passes(
                    spec.kind, spec.c, len(members), b2 - a2 + 1,
                    self.table[(key_vs, a2, b2)],
                ):
                    return False
                if any(
                    len(other) > len(members) and other > members
                    for other in iso.in_window(a2, b2)
                ):
                    return False
        return True


def brute_force_enumerate(
    tg: TemporalGraph,
    spec: IsolationSpec,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    tau_cap: int = DEFAULT_TAU_CAP,
) -> ResultSet:
    return OracleIndex(tg, vertex_cap=vertex_cap, tau_cap=tau_cap).enumerate(spec)


def brute_force_isolated_subsets(
    tg: TemporalGraph, members, w: TimeWindow, spec: IsolationSpec
) -> set[frozenset[int]]:
    """All inclusion-maximal spec-isolated subsets of a clique, by
    scanning every subset of size >= 2."""
    base = sorted(set(members))
    if len(base) > SUBSET_CAP:
        raise OracleCapsExceeded("clique too large for subset oracle")
    if not is_temporal_clique(tg, base, w):
        raise ValueError("not a clique in window")
    hits: list[frozenset[int]] = []
    for size in range(len(base), 1, -1):
        for combo in combinations(base, size):
            agg = _aggregates(tg, combo, w.a, w.b)
            if _passes(spec.kind, spec.c, size, w.length, agg):
                cand = frozenset(combo)
                if not any(prev > cand for prev in hits):
                    hits.append(cand)
    return set(hits)
