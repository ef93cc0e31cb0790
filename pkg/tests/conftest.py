import pytest

from isoclique import IsolationSpec, TemporalGraph, parse_c


@pytest.fixture
def graph_x() -> TemporalGraph:
    """Four vertices, two layers; {1,2,3} is a triangle in both layers
    with a single outgoing time edge (1-4 in layer 1)."""
    return TemporalGraph(4, [{(1, 2), (1, 3), (2, 3), (1, 4)},
                             {(1, 2), (1, 3), (2, 3)}])


def spec(kind: str, c) -> IsolationSpec:
    return IsolationSpec(kind, parse_c(c))
