"""The six temporal isolation predicates.

All thresholds use exact rational arithmetic: the parameter c is a
Fraction (parsed from a decimal string) and every comparison is a strict
integer-vs-rational `<`.  Floats are rejected because the predicates flip
membership exactly at the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import StaticGraph, TemporalGraph, TimeWindow, is_clique_in_layer

ALLTIME_AVG = "alltime-avg"
ALLTIME_MAX = "alltime-max"
AVG_ALLTIME = "avg-alltime"
MAX_USUALLY = "max-usually"
USUALLY_AVG = "usually-avg"
USUALLY_MAX = "usually-max"

KINDS = (ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME, MAX_USUALLY, USUALLY_AVG,
         USUALLY_MAX)

# usually-max has no fast enumerator; it is served by the oracle only.
FAST_KINDS = (ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME, MAX_USUALLY, USUALLY_AVG)

# Kinds whose isolation restricts to subwindows (max over the time
# dimension, so fewer layers never hurt).  Their maximality check only
# needs one-step window extensions.
ALLTIME_FAMILY = frozenset({ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME})
USUALLY_FAMILY = frozenset({MAX_USUALLY, USUALLY_AVG, USUALLY_MAX})


def parse_c(text) -> Fraction:
    """Parse an isolation parameter from a decimal or fraction string."""
    if isinstance(text, float):
        raise TypeError("c must be exact; pass a string, int, or Fraction")
    c = Fraction(text)
    if c <= 0:
        raise ValueError("c must be positive")
    return c


@dataclass(frozen=True)
class IsolationSpec:
    """An isolation type name plus its exact rational parameter c."""

    kind: str
    c: Fraction

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown isolation kind {self.kind!r}")
        object.__setattr__(self, "c", parse_c(self.c))


@dataclass(frozen=True)
class OutdegProfile:
    """Per-layer, per-vertex outdegrees of a temporal clique, with the
    aggregates each isolation predicate folds over."""

    vertices: tuple[int, ...]       # sorted members of C
    window: TimeWindow
    entries: tuple[tuple[int, ...], ...]  # entries[vi][li] for vertex/layer idx

    def entry(self, v: int, i: int) -> int:
        return self.entries[self.vertices.index(v)][i - self.window.a]

    @property
    def row_sums(self) -> tuple[int, ...]:  # per vertex, summed over layers
        return tuple(sum(row) for row in self.entries)

    @property
    def row_maxes(self) -> tuple[int, ...]:
        return tuple(max(row) for row in self.entries)

    @property
    def col_sums(self) -> tuple[int, ...]:  # per layer, summed over vertices
        return tuple(sum(col) for col in zip(*self.entries))

    @property
    def col_maxes(self) -> tuple[int, ...]:
        return tuple(max(col) for col in zip(*self.entries))

    @property
    def total(self) -> int:
        return sum(self.row_sums)

    @property
    def max_entry(self) -> int:
        return max(self.row_maxes)


def outdeg_profile(
    tg: TemporalGraph, members, w: TimeWindow, *, assume_clique: bool = False
) -> OutdegProfile:
    """Outdegree matrix for (C, w).  Uses the clique identity
    outdeg_i(v, C) = deg_i(v) - |C| + 1, so C must be a clique in every
    window layer (checked unless the caller vouches for it)."""
    tg.check_window(w)
    vs = tuple(sorted(set(members)))
    if len(vs) < 2:
        raise ValueError("profile needs at least two vertices")
    if not assume_clique:
        for i in w.layers():
            if not is_clique_in_layer(tg, vs, i):
                raise ValueError("not a clique in window")
    off = len(vs) - 1
    rows = tuple(
        tuple(tg.layer_degree(i, v) - off for i in w.layers()) for v in vs
    )
    return OutdegProfile(vs, w, rows)


def evaluate(spec: IsolationSpec, profile: OutdegProfile) -> bool:
    """Fold the matching strict inequality over a profile."""
    c = spec.c
    size = len(profile.vertices)
    t = profile.window.length
    kind = spec.kind
    if kind == ALLTIME_AVG:
        return max(profile.col_sums) < c * size
    if kind == ALLTIME_MAX:
        return profile.max_entry < c
    if kind == AVG_ALLTIME:
        return sum(profile.row_maxes) < c * size
    if kind == MAX_USUALLY:
        return max(profile.row_sums) < c * t
    if kind == USUALLY_AVG:
        return profile.total < c * size * t
    if kind == USUALLY_MAX:
        return sum(profile.col_maxes) < c * t
    raise AssertionError(kind)


def is_isolated(
    tg: TemporalGraph,
    spec: IsolationSpec,
    members,
    w: TimeWindow,
    *,
    assume_clique: bool = False,
) -> bool:
    """True iff (C, w) is a spec-isolated temporal clique."""
    profile = outdeg_profile(tg, members, w, assume_clique=assume_clique)
    return evaluate(spec, profile)


def static_max_isolated(g: StaticGraph, members, c: Fraction) -> bool:
    mset = frozenset(members)
    return all(
        sum(1 for u in g.neighbors(v) if u not in mset) < c for v in mset
    )


def static_avg_isolated(g: StaticGraph, members, c: Fraction) -> bool:
    mset = frozenset(members)
    total = sum(
        sum(1 for u in g.neighbors(v) if u not in mset) for v in mset
    )
    return total < c * len(mset)
