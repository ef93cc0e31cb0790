"""Contact-list parsing, time binning, delta scaling, and synthetic
instance generation.

Input format: plain text, one contact per line, whitespace-separated
fields `timestamp u v [extra columns ignored]`, comment lines start
with '#'.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .graphs import TemporalGraph, TimeWindow, norm_edge


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class ContactRecord:
    t: int
    u: str
    v: str


@dataclass(frozen=True)
class IngestConfig:
    resolution: int           # seconds per layer
    normalize_origin: bool = True

    def __post_init__(self):
        if self.resolution <= 0:
            raise ValueError("resolution must be positive")


def parse_contact_list(stream: IO[str] | Iterable[str]) -> list[ContactRecord]:
    records = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 3:
            raise ParseError(f"line {lineno}: expected at least 3 fields")
        try:
            t = int(fields[0])
        except ValueError:
            raise ParseError(f"line {lineno}: bad timestamp {fields[0]!r}") from None
        u, v = fields[1], fields[2]
        if u == v:
            raise ParseError(f"line {lineno}: self-contact of {u!r}")
        records.append(ContactRecord(t, u, v))
    if not records:
        raise ParseError("empty contact list")
    return records


def bin_to_layers(records: Sequence[ContactRecord], cfg: IngestConfig) -> TemporalGraph:
    """Bin contacts into layers of `resolution` seconds.

    Vertex labels are mapped to dense ids in order of first appearance;
    the label table and the lifetime in seconds ride along on the graph.
    """
    if not records:
        raise ParseError("no records to bin")
    ids: dict[str, int] = {}
    labels: list[str] = [""]  # index 0 unused
    for rec in records:
        for lbl in (rec.u, rec.v):
            if lbl not in ids:
                ids[lbl] = len(labels)
                labels.append(lbl)
    t_min = min(r.t for r in records)
    t_max = max(r.t for r in records)
    origin = t_min if cfg.normalize_origin else 0
    layers: dict[int, set] = {}
    for rec in records:
        layer = (rec.t - origin) // cfg.resolution + 1
        layers.setdefault(layer, set()).add(norm_edge(ids[rec.u], ids[rec.v]))
    tau = max(layers)
    return TemporalGraph(
        len(labels) - 1,
        [layers.get(i, set()) for i in range(1, tau + 1)],
        labels=labels,
        lifetime_s=t_max - t_min,
    )


def serialize_contact_list(tg: TemporalGraph, resolution: int) -> str:
    """Inverse of binning: one row per (layer-start-second, u, v)."""
    lines = []
    for i, layer in enumerate(tg.layers, start=1):
        t = (i - 1) * resolution
        for u, v in sorted(layer):
            lu = tg.labels[u] if tg.labels else str(u)
            lv = tg.labels[v] if tg.labels else str(v)
            lines.append(f"{t} {lu} {lv}")
    return "\n".join(lines) + "\n"


def scale_delta(delta_base: int, lifetime_s: int, total_time_edges: int,
                resolution: int) -> int:
    """Scale a protocol delta (seconds) by lifetime / (5 * |TE|) and
    convert to whole layers, flooring."""
    if total_time_edges <= 0:
        raise ValueError("need at least one time edge")
    if delta_base < 0:
        raise ValueError("delta must be non-negative")
    scaled = Fraction(delta_base * lifetime_s, 5 * total_time_edges * resolution)
    return math.floor(scaled)


def generate_random_temporal_graph(
    n: int, tau: int, edge_probability: float, seed: int
) -> TemporalGraph:
    """Independent G(n, p) per layer, deterministic under seed."""
    if n < 2 or tau < 1:
        raise ValueError("need n >= 2 and tau >= 1")
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge probability outside [0, 1]")
    rng = random.Random(seed)
    layers = []
    for _ in range(tau):
        edges = {
            (u, v)
            for u in range(1, n)
            for v in range(u + 1, n + 1)
            if rng.random() < edge_probability
        }
        layers.append(edges)
    return TemporalGraph(n, layers)


def plant_isolated_clique(
    tg: TemporalGraph, members, w: TimeWindow, max_outgoing_per_layer: int
) -> TemporalGraph:
    """Force `members` complete in every layer of the window and prune
    cross edges so each of those layers keeps at most the budget of
    edges leaving the planted set."""
    if max_outgoing_per_layer < 0:
        raise ValueError("budget must be non-negative")
    tg.check_window(w)
    mset = frozenset(members)
    if len(mset) < 2:
        raise ValueError("planted cliques have at least two vertices")
    layers = []
    for i, layer in enumerate(tg.layers, start=1):
        if not (w.a <= i <= w.b):
            layers.append(layer)
            continue
        edges = set(layer)
        edges.update(
            (u, v) for u in mset for v in mset if u < v
        )
        crossing = sorted(
            e for e in edges if (e[0] in mset) != (e[1] in mset)
        )
        edges.difference_update(crossing[max_outgoing_per_layer:])
        layers.append(edges)
    return TemporalGraph(tg.vertex_count, layers, labels=tg.labels,
                         lifetime_s=tg.lifetime_s)
