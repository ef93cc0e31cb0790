"""Enumeration of all maximal isolated temporal cliques.

Two-phase search: phase 1 scans every time window with an incrementally
maintained intersection graph, generates trimmed candidate sets per pivot
vertex, enumerates maximal cliques above the size bound, and shrinks each
to its isolated subsets.  Phase 2 filters the collected candidates down
to the maximal ones (time- and vertex-maximality).

usually-max is not supported here; its subset subroutine cannot be
bounded usefully, so that kind is served by the oracle module only.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    IntersectionView,
    StaticGraph,
    TemporalGraph,
    TimeWindow,
    intersection_graph,
    is_clique_in_layer,
)
from .isolation import (
    ALLTIME_AVG,
    ALLTIME_MAX,
    AVG_ALLTIME,
    FAST_KINDS,
    MAX_USUALLY,
    USUALLY_AVG,
    USUALLY_MAX,
    IsolationSpec,
    is_isolated,
)
from .results import ResultSet, TemporalClique


class TimeLimitExceeded(RuntimeError):
    pass


class UnsupportedKind(ValueError):
    pass


@dataclass(frozen=True)
class CandidateSet:
    """Trimmed search space for one pivot: every avg-c-isolated clique of
    the window intersection graph whose pivot is `pivot` lies inside
    `members`."""

    pivot: int
    members: frozenset[int]
    k: int  # minimum admissible clique size


def _empty_candidates(pivot: int, k: int) -> CandidateSet:
    return CandidateSet(pivot, frozenset(), k)


def candidate_set(g, order_pos: dict[int, int], v: int, c) -> CandidateSet:
    """Candidate set for pivot v: v plus its neighbors later in the
    degree-ascending order, pruned of vertices that cannot reach the
    minimum clique size k = floor(deg(v) - c + 2)."""
    k = max(math.floor(g.degree(v) - c + 2), 2)
    members = {v} | {u for u in g.neighbors(v) if order_pos[u] > order_pos[v]}
    while True:
        if len(members) < k:
            return _empty_candidates(v, k)
        internal = {u: len(g.neighbors(u) & members) for u in members}
        if internal[v] < k - 1:
            return _empty_candidates(v, k)
        drop = [u for u in members if u != v and internal[u] < k - 1]
        if not drop:
            return CandidateSet(v, frozenset(members), k)
        members.difference_update(drop)


def _bron_kerbosch(r: set, p: set, x: set, adj: dict[int, set[int]],
                   k: int, out: list) -> None:
    if not p and not x:
        if len(r) >= k:
            out.append(frozenset(r))
        return
    pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
    for v in sorted(p - adj[pivot]):
        _bron_kerbosch(r | {v}, p & adj[v], x & adj[v], adj, k, out)
        p.remove(v)
        x.add(v)


def maximal_cliques_min_size(graph, k: int = 1) -> list[frozenset[int]]:
    """All maximal cliques of size >= k, via pivoted Bron-Kerbosch.

    `graph` is either a StaticGraph or an adjacency dict restricted to
    the subgraph of interest (isolated vertices allowed).
    """
    if isinstance(graph, StaticGraph):
        adj = {v: set(graph.neighbors(v)) for v in range(1, graph.vertex_count + 1)}
    else:
        adj = {v: set(ns) for v, ns in graph.items()}
    out: list[frozenset[int]] = []
    _bron_kerbosch(set(), set(adj), set(), adj, k, out)
    return sorted(out, key=lambda cq: tuple(sorted(cq)))


def _vertex_scores(tg: TemporalGraph, members, w: TimeWindow, mode: str):
    if mode == "max":
        return {v: max(tg.layer_degree(i, v) for i in w.layers()) for v in members}
    return {v: sum(tg.layer_degree(i, v) for i in w.layers()) for v in members}


def _score_mode(kind: str) -> str:
    return "max" if kind in (ALLTIME_MAX, AVG_ALLTIME, ALLTIME_AVG) else "sum"


def _removal_budget(size: int, delta: int, c) -> int:
    # the floor(delta - c + 2) lowest-scored vertices are mandatory in
    # every vertex-maximal isolated subset; only the rest may be dropped
    return max(size - math.floor(delta - c + 2), 0)


def isolated_subsets_greedy(tg, members, w: TimeWindow, delta: int,
                            spec: IsolationSpec) -> set[frozenset[int]]:
    """alltime-max / max-usually: peel off offending vertices one at a
    time; there is at most one maximal isolated subset."""
    if spec.kind not in (ALLTIME_MAX, MAX_USUALLY):
        raise ValueError(f"greedy subroutine does not handle {spec.kind}")
    c = spec.c
    scores = _vertex_scores(tg, members, w, _score_mode(spec.kind))
    k = max(math.floor(delta - c + 2), 2)
    t = w.length
    cur = set(members)
    while len(cur) >= k:
        if spec.kind == ALLTIME_MAX:
            threshold = len(cur) - 1 + c
        else:
            threshold = t * (len(cur) - 1 + c)
        offending = [v for v in cur if scores[v] >= threshold]
        if not offending:
            return {frozenset(cur)}
        cur.remove(max(offending, key=lambda v: (scores[v], -v)))
    return set()


def isolated_subsets_search(tg, members, w: TimeWindow, delta: int,
                            spec: IsolationSpec) -> set[frozenset[int]]:
    """usually-avg / avg-alltime: branch over removal sets drawn from the
    d top-scored vertices, exploring removed indices in increasing order
    so every set is generated once."""
    if spec.kind not in (USUALLY_AVG, AVG_ALLTIME):
        raise ValueError(f"search subroutine does not handle {spec.kind}")
    c = spec.c
    scores = _vertex_scores(tg, members, w, _score_mode(spec.kind))
    d = _removal_budget(len(members), delta, c)
    ranked = sorted(members, key=lambda v: (-scores[v], v))[:d]
    t = w.length
    factor = t if spec.kind == USUALLY_AVG else 1

    result: set[frozenset[int]] = set()
    frontier: list[tuple[frozenset[int], int]] = [(frozenset(), 0)]
    while frontier:
        nxt = []
        for removed, j in frontier:
            cur = set(members) - removed
            if len(cur) < 2:
                continue
            if sum(scores[v] for v in cur) >= factor * len(cur) * (len(cur) - 1 + c):
                nxt.extend(
                    (removed | {ranked[i]}, i + 1) for i in range(j, len(ranked))
                )
            else:
                result.add(frozenset(cur))
        frontier = nxt
    return result


def isolated_subsets_alltime_avg(tg, members, w: TimeWindow, delta: int,
                                 spec: IsolationSpec) -> set[frozenset[int]]:
    """alltime-avg: branch on the top-degree vertices of the earliest
    layer violating per-layer average isolation; the removal candidates
    are layer-specific and recomputed at every search node."""
    if spec.kind != ALLTIME_AVG:
        raise ValueError(f"per-layer subroutine does not handle {spec.kind}")
    c = spec.c
    d = _removal_budget(len(members), delta, c)
    base = frozenset(members)

    def first_violating_layer(cur):
        bound = len(cur) * (len(cur) - 1 + c)
        for i in w.layers():
            if sum(tg.layer_degree(i, v) for v in cur) >= bound:
                return i
        return None

    result: set[frozenset[int]] = set()
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for removed in frontier:
            cur = base - removed
            if len(cur) < 2:
                continue
            layer = first_violating_layer(cur)
            if layer is None:
                result.add(cur)
                continue
            if len(cur) > delta - c + 2:
                hottest = sorted(
                    cur, key=lambda v: (-tg.layer_degree(layer, v), v)
                )[:d]
                for v in hottest:
                    grown = removed | {v}
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    # the layer-specific branching can reach subsets of other hits
    return {s for s in result if not any(o > s for o in result)}


def isolated_subsets(tg, members, w: TimeWindow, delta: int,
                     spec: IsolationSpec) -> set[frozenset[int]]:
    if spec.kind in (ALLTIME_MAX, MAX_USUALLY):
        return isolated_subsets_greedy(tg, members, w, delta, spec)
    if spec.kind in (USUALLY_AVG, AVG_ALLTIME):
        return isolated_subsets_search(tg, members, w, delta, spec)
    if spec.kind == ALLTIME_AVG:
        return isolated_subsets_alltime_avg(tg, members, w, delta, spec)
    raise UnsupportedKind(f"no subset subroutine for {spec.kind}")


def is_vertex_maximal_resultset(rc: TemporalClique, rs: ResultSet) -> bool:
    """Vertex-maximality via the complete phase-1 result set
    (alltime-avg only): false iff it holds a strict superset with the
    identical window."""
    return not rs.has_strict_superset(rc.member_set, rc.a, rc.b)


def is_vertex_maximal_neighborhood(
    tg: TemporalGraph,
    rc: TemporalClique,
    spec: IsolationSpec,
    g_cap: Optional[StaticGraph] = None,
) -> bool:
    """Vertex-maximality via the pivot's common neighborhood: enumerate
    maximal cliques among the vertices adjacent to all of C and peel each
    until it extends C to an isolated clique or dies."""
    g = g_cap if g_cap is not None else intersection_graph(tg, rc.window)
    members = rc.member_set
    pivot = min(members, key=lambda v: (g.degree(v), v))
    shared = {
        v
        for v in g.neighbors(pivot) - members
        if members <= g.neighbors(v)
    }
    if not shared:
        return True
    mode = "max" if spec.kind in (ALLTIME_MAX, AVG_ALLTIME, ALLTIME_AVG) else "sum"
    scores = _vertex_scores(tg, shared, rc.window, mode)
    adj = {v: g.neighbors(v) & shared for v in shared}
    for extension in maximal_cliques_min_size(adj, 1):
        grow = set(extension)
        while grow and not is_isolated(
            tg, spec, members | grow, rc.window, assume_clique=True
        ):
            grow.remove(max(grow, key=lambda v: (scores[v], -v)))
        if grow:
            return False
    return True


def is_maximal_alltime_family(
    tg: TemporalGraph,
    rc: TemporalClique,
    spec: IsolationSpec,
    rs: Optional[ResultSet] = None,
) -> bool:
    """Maximality for alltime-avg / alltime-max / avg-alltime: these
    kinds restrict to subwindows, so one-step window extensions suffice
    for time-maximality."""
    members = rc.member_set
    for a2, b2 in ((rc.a - 1, rc.b), (rc.a, rc.b + 1)):
        if a2 < 1 or b2 > tg.tau:
            continue
        extra_layer = a2 if a2 < rc.a else b2
        if is_clique_in_layer(tg, members, extra_layer) and is_isolated(
            tg, spec, members, TimeWindow(a2, b2), assume_clique=True
        ):
            return False
    if spec.kind == ALLTIME_AVG:
        if rs is None:
            raise ValueError("alltime-avg maximality needs the phase-1 result set")
        return is_vertex_maximal_resultset(rc, rs)
    return is_vertex_maximal_neighborhood(tg, rc, spec)


def is_maximal_usually_family(
    tg: TemporalGraph, rc: TemporalClique, spec: IsolationSpec
) -> bool:
    """Maximality for max-usually / usually-avg: scan every window
    containing [a, b] on which C stays a clique; reject if any other such
    window is isolated or if C is not vertex-maximal somewhere."""
    members = rc.member_set
    for a2 in range(rc.a, 0, -1):
        if not is_clique_in_layer(tg, members, a2):
            break
        for b2 in range(rc.b, tg.tau + 1):
            if not is_clique_in_layer(tg, members, b2):
                break
            w2 = TimeWindow(a2, b2)
            if (a2, b2) != (rc.a, rc.b) and is_isolated(
                tg, spec, members, w2, assume_clique=True
            ):
                return False
            if not is_vertex_maximal_neighborhood(
                tg, TemporalClique.of(members, a2, b2), spec
            ):
                return False
    return True


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise TimeLimitExceeded("enumeration exceeded the time limit")


def _phase1_for_start(
    tg: TemporalGraph,
    spec: IsolationSpec,
    a: int,
    trim: bool,
    deadline: Optional[float],
) -> list[TemporalClique]:
    found: list[TemporalClique] = []
    view = IntersectionView(tg, a)
    for b in range(a, tg.tau + 1):
        if b > a:
            view.extend()
        if not view.edges:
            break  # intersections only shrink; no window [a, b'>=b] has cliques
        _check_deadline(deadline)
        w = TimeWindow(a, b)
        order = sorted(view.active_vertices(), key=lambda v: (view.degree(v), v))
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            if trim:
                cand = candidate_set(view, pos, v, spec.c)
            else:
                cand = CandidateSet(
                    v,
                    frozenset({v} | view.neighbors(v)),
                    max(math.floor(view.degree(v) - spec.c + 2), 2),
                )
            if len(cand.members) < cand.k:
                continue
            sub_adj = {u: view.neighbors(u) & cand.members for u in cand.members}
            for clique in maximal_cliques_min_size(sub_adj, cand.k):
                delta_c = min(view.degree(u) for u in clique)
                for subset in isolated_subsets(tg, clique, w, delta_c, spec):
                    found.append(TemporalClique.of(subset, a, b))
    return found


def _phase1_worker(args) -> list[TemporalClique]:
    return _phase1_for_start(*args)


def enumerate_maximal_isolated(
    tg: TemporalGraph,
    spec: IsolationSpec,
    *,
    trim: bool = True,
    threads: int = 1,
    time_limit: Optional[float] = None,
    debug_check: bool = False,
) -> ResultSet:
    """All maximal spec-isolated temporal cliques of tg.

    `trim=False` replaces the trimmed candidate sets by the full closed
    neighborhoods (differential-testing hook; output must not change).
    `threads` > 1 distributes the per-window-start scans over processes;
    output content is independent of the worker count.
    """
    if spec.kind == USUALLY_MAX:
        raise UnsupportedKind(
            f"{USUALLY_MAX} is unsupported by the fast enumerator; use the oracle"
        )
    if spec.kind not in FAST_KINDS:
        raise UnsupportedKind(f"unknown isolation kind {spec.kind!r}")
    deadline = None if time_limit is None else time.monotonic() + time_limit

    candidates = ResultSet()
    starts = range(1, tg.tau + 1)
    if threads > 1 and tg.tau > 1:
        jobs = [(tg, spec, a, trim, deadline) for a in starts]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for batch in pool.map(_phase1_worker, jobs):
                for tc in batch:
                    candidates.add(tc)
    else:
        for a in starts:
            for tc in _phase1_for_start(tg, spec, a, trim, deadline):
                candidates.add(tc)

    if debug_check:
        for tc in candidates:
            assert is_isolated(tg, spec, tc.member_set, tc.window)

    final = ResultSet()
    for tc in candidates.sorted_entries():
        _check_deadline(deadline)
        if spec.kind in (ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME):
            keep = is_maximal_alltime_family(tg, tc, spec, candidates)
        else:
            keep = is_maximal_usually_family(tg, tc, spec)
        if keep:
            final.add(tc)
    return final
