import pytest

from isoclique import (
    OracleCapsExceeded,
    OracleIndex,
    TemporalGraph,
    TimeWindow,
    brute_force_enumerate,
    brute_force_isolated_subsets,
    generate_random_temporal_graph,
    is_isolated,
)
from isoclique.isolation import KINDS, USUALLY_MAX
from isoclique.results import TemporalClique

from conftest import spec


def test_index_knows_temporal_cliques(graph_x):
    idx = OracleIndex(graph_x)
    assert idx.is_temporal_clique(frozenset({1, 2, 3}), 1, 2)
    assert idx.is_temporal_clique(frozenset({1, 4}), 1, 1)
    assert not idx.is_temporal_clique(frozenset({1, 4}), 1, 2)
    assert not idx.is_temporal_clique(frozenset({2, 4}), 1, 1)


def test_isolated_cliques_includes_non_maximal(graph_x):
    idx = OracleIndex(graph_x)
    iso = idx.isolated_cliques(spec(USUALLY_MAX, "0.75")).as_set()
    assert TemporalClique(1, 2, (1, 2, 3)) in iso
    assert TemporalClique(2, 2, (1, 2, 3)) in iso  # dropped as non-maximal later


def test_usually_max_golden(graph_x):
    # frozen reference values for the one kind without a fast enumerator
    got = brute_force_enumerate(graph_x, spec(USUALLY_MAX, "0.75"))
    assert got.as_set() == {TemporalClique(1, 2, (1, 2, 3))}
    got = brute_force_enumerate(graph_x, spec(USUALLY_MAX, "0.001"))
    assert got.as_set() == {TemporalClique(2, 2, (1, 2, 3))}


def test_oracle_outputs_are_isolated_and_maximal():
    for seed in (2, 9, 17):
        tg = generate_random_temporal_graph(8, 4, 0.5, seed)
        idx = OracleIndex(tg)
        for kind in KINDS:
            s = spec(kind, "1.5")
            rs = idx.enumerate(s)
            for tc in rs:
                assert is_isolated(tg, s, tc.member_set, tc.window)
                # no isolated strict superset shares the window
                assert not any(
                    other.window == tc.window
                    and other.member_set > tc.member_set
                    for other in idx.isolated_cliques(s)
                )


def test_caps_rejected():
    with pytest.raises(OracleCapsExceeded, match="too large"):
        OracleIndex(generate_random_temporal_graph(17, 2, 0.3, 0))
    with pytest.raises(OracleCapsExceeded, match="too large"):
        OracleIndex(generate_random_temporal_graph(5, 9, 0.3, 0))
    # caps are adjustable for callers who accept the blowup
    OracleIndex(generate_random_temporal_graph(17, 2, 0.1, 0), vertex_cap=17)


def test_subset_oracle_examples(graph_x):
    w = TimeWindow(1, 2)
    got = brute_force_isolated_subsets(graph_x, {1, 2, 3}, w,
                                       spec("alltime-max", "1.5"))
    assert got == {frozenset({1, 2, 3})}
    got = brute_force_isolated_subsets(graph_x, {1, 2, 3}, w,
                                       spec("alltime-max", "1"))
    assert got == set()


def test_subset_oracle_keeps_only_inclusion_maximal():
    # two disjoint pairs inside a 4-clique after the hub is removed
    layer = {(u, v) for u in range(1, 4) for v in range(u + 1, 5)}
    layer |= {(1, 5), (1, 6), (1, 7)}
    tg = TemporalGraph(7, [layer])
    # at c = 2.5 both {2,3,4} and its pairs clear the bound once the hub
    # is gone; only the triple survives the superset filter
    got = brute_force_isolated_subsets(tg, {1, 2, 3, 4}, TimeWindow(1, 1),
                                       spec("alltime-max", "2.5"))
    assert got == {frozenset({2, 3, 4})}


def test_subset_oracle_rejects_non_clique(graph_x):
    with pytest.raises(ValueError, match="not a clique"):
        brute_force_isolated_subsets(graph_x, {1, 4}, TimeWindow(1, 2),
                                     spec("alltime-max", "1"))
