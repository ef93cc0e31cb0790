import random
from fractions import Fraction

import pytest

from isoclique import (
    IsolationSpec,
    TimeWindow,
    generate_random_temporal_graph,
    intersection_graph,
    is_isolated,
    outdeg_profile,
    parse_c,
)
from isoclique.enumeration import maximal_cliques_min_size
from isoclique.isolation import (
    ALLTIME_AVG,
    ALLTIME_MAX,
    AVG_ALLTIME,
    KINDS,
    MAX_USUALLY,
    USUALLY_AVG,
    USUALLY_MAX,
    static_avg_isolated,
    static_max_isolated,
)

from conftest import spec

W12 = TimeWindow(1, 2)
C123 = frozenset({1, 2, 3})


def test_parse_c_is_exact():
    assert parse_c("0.001") == Fraction(1, 1000)
    assert parse_c("1/6") == Fraction(1, 6)
    with pytest.raises(TypeError):
        parse_c(0.1)
    with pytest.raises(ValueError):
        parse_c("-1")


def test_spec_validates_kind():
    with pytest.raises(ValueError, match="unknown isolation kind"):
        IsolationSpec("sometimes-avg", Fraction(1))


def test_profile_entries(graph_x):
    p = outdeg_profile(graph_x, C123, W12)
    assert p.entry(1, 1) == 1
    assert p.entry(1, 2) == 0
    assert p.entry(2, 1) == 0 and p.entry(3, 2) == 0
    assert p.row_sums == (1, 0, 0)
    assert p.col_sums == (1, 0)
    assert p.total == 1 and p.max_entry == 1


def test_profile_rejects_non_clique(graph_x):
    with pytest.raises(ValueError, match="not a clique in window"):
        outdeg_profile(graph_x, {1, 4}, W12)
    with pytest.raises(ValueError, match="not a clique in window"):
        is_isolated(graph_x, spec(ALLTIME_MAX, "1"), {1, 4}, W12)


def test_profile_all_zero_on_complete_graph():
    from isoclique import TemporalGraph

    full = {(u, v) for u in range(1, 4) for v in range(u + 1, 5)}
    tg = TemporalGraph(4, [full, full])
    p = outdeg_profile(tg, {1, 2, 3, 4}, W12)
    assert p.total == 0


def test_alltime_max_strictness(graph_x):
    assert not is_isolated(graph_x, spec(ALLTIME_MAX, "1"), C123, W12)
    assert is_isolated(graph_x, spec(ALLTIME_MAX, "1.5"), C123, W12)


def test_usually_avg_threshold(graph_x):
    assert is_isolated(graph_x, spec(USUALLY_AVG, "0.2"), C123, W12)
    # total outdegree is exactly the bound at c = 1/6; strict < fails
    assert not is_isolated(graph_x, spec(USUALLY_AVG, "1/6"), C123, W12)


def test_max_usually_threshold(graph_x):
    assert not is_isolated(graph_x, spec(MAX_USUALLY, "0.5"), C123, W12)
    assert is_isolated(graph_x, spec(MAX_USUALLY, "0.6"), C123, W12)


def test_zero_outgoing_isolated_for_every_kind(graph_x):
    w2 = TimeWindow(2, 2)
    for kind in KINDS:
        assert is_isolated(graph_x, spec(kind, "0.001"), C123, w2)


def _random_clique_instance(seed):
    rng = random.Random(seed)
    tg = generate_random_temporal_graph(rng.randint(3, 9), rng.randint(1, 5),
                                        rng.choice([0.3, 0.6, 0.9]), seed)
    a = rng.randint(1, tg.tau)
    b = rng.randint(a, tg.tau)
    g = intersection_graph(tg, TimeWindow(a, b))
    adj = {v: set(g.neighbors(v)) for v in range(1, tg.vertex_count + 1)}
    cliques = maximal_cliques_min_size(adj, 2)
    if not cliques:
        return None
    return tg, rng.choice(cliques), TimeWindow(a, b), g


def test_monotone_in_c():
    for seed in range(60):
        inst = _random_clique_instance(seed)
        if inst is None:
            continue
        tg, clique, w, _ = inst
        for kind in KINDS:
            lo, hi = spec(kind, "0.8"), spec(kind, "2.4")
            if is_isolated(tg, lo, clique, w):
                assert is_isolated(tg, hi, clique, w)


def test_alltime_kinds_restrict_to_subwindows():
    # max aggregation over time only improves on fewer layers
    for seed in range(40):
        inst = _random_clique_instance(seed)
        if inst is None or inst[2].length < 2:
            continue
        tg, clique, w, _ = inst
        for kind in (ALLTIME_AVG, ALLTIME_MAX, AVG_ALLTIME):
            s = spec(kind, "1.5")
            if is_isolated(tg, s, clique, w):
                for a2 in range(w.a, w.b + 1):
                    for b2 in range(a2, w.b + 1):
                        assert is_isolated(tg, s, clique, TimeWindow(a2, b2))


def test_tiny_c_collapses_all_kinds():
    # once c*|C|*len <= 1, every kind demands an all-zero profile
    for seed in range(40):
        inst = _random_clique_instance(seed)
        if inst is None:
            continue
        tg, clique, w, _ = inst
        verdicts = {
            kind: is_isolated(tg, spec(kind, "0.001"), clique, w)
            for kind in KINDS
        }
        assert len(set(verdicts.values())) == 1
        profile = outdeg_profile(tg, clique, w)
        assert verdicts[ALLTIME_MAX] == (profile.total == 0)


IMPLICATIONS = [
    (ALLTIME_MAX, AVG_ALLTIME),
    (ALLTIME_MAX, USUALLY_MAX),
    (AVG_ALLTIME, ALLTIME_AVG),
    (ALLTIME_AVG, USUALLY_AVG),
    (USUALLY_MAX, MAX_USUALLY),
    (MAX_USUALLY, USUALLY_AVG),
]


def test_implication_diagram_smoke():
    # the full 10^4-sample sweep lives in the acceptance suite
    for seed in range(50):
        inst = _random_clique_instance(seed)
        if inst is None:
            continue
        tg, clique, w, g_cap = inst
        for c in ("0.5", "1", "2.5"):
            held = {k: is_isolated(tg, spec(k, c), clique, w) for k in KINDS}
            for stronger, weaker in IMPLICATIONS:
                assert not held[stronger] or held[weaker]
            cf = parse_c(c)
            if held[MAX_USUALLY]:
                assert static_max_isolated(g_cap, clique, cf)
            if held[USUALLY_AVG]:
                assert static_avg_isolated(g_cap, clique, cf)
