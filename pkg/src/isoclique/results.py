"""Result container for enumerated temporal cliques."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import TimeWindow


@dataclass(frozen=True, order=True)
class TemporalClique:
    """A vertex set (canonically sorted) together with its time window."""

    a: int
    b: int
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, members: Iterable[int], a: int, b: int) -> "TemporalClique":
        vs = tuple(sorted(set(members)))
        if len(vs) < 2:
            raise ValueError("cliques have at least two vertices")
        if not (1 <= a <= b):
            raise ValueError(f"invalid window [{a}, {b}]")
        return cls(a, b, vs)

    @property
    def window(self) -> TimeWindow:
        return TimeWindow(self.a, self.b)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


class ResultSet:
    """Deduplicated set of TemporalClique with a per-window index."""

    def __init__(self, entries: Iterable[TemporalClique] = ()):
        self._entries: set[TemporalClique] = set()
        self._by_window: dict[tuple[int, int], set[frozenset[int]]] = {}
        for tc in entries:
            self.add(tc)

    def add(self, tc: TemporalClique) -> None:
        if tc not in self._entries:
            self._entries.add(tc)
            self._by_window.setdefault((tc.a, tc.b), set()).add(tc.member_set)

    def add_members(self, members: Iterable[int], a: int, b: int) -> None:
        self.add(TemporalClique.of(members, a, b))

    def merge(self, other: "ResultSet") -> None:
        for tc in other._entries:
            self.add(tc)

    def in_window(self, a: int, b: int) -> frozenset[frozenset[int]]:
        return frozenset(self._by_window.get((a, b), frozenset()))

    def has_strict_superset(self, members: frozenset[int], a: int, b: int) -> bool:
        return any(
            len(other) > len(members) and other > members
            for other in self._by_window.get((a, b), ())
        )

    def sorted_entries(self) -> list[TemporalClique]:
        return sorted(self._entries)

    def as_set(self) -> frozenset[TemporalClique]:
        return frozenset(self._entries)

    def __contains__(self, tc: TemporalClique) -> bool:
        return tc in self._entries

    def __iter__(self) -> Iterator[TemporalClique]:
        return iter(self.sorted_entries())

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, ResultSet):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self):
        return f"ResultSet({len(self._entries)} cliques)"
