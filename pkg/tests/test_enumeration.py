import pytest

from graphtop import (
    Digraph,
    Graph,
    automorphism_group,
    cartesian_product,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_transitive_digraphs,
    fix_count,
    h_burnside,
    h_classes,
    h_sink,
    is_transitive,
    path_graph,
    tau,
    tau_sink,
    transitive_digraph_classes,
    underlying_graph,
    wheel_graph,
)
from graphtop.enumeration import CountReport, counts_for, stream_masks
from graphtop.errors import (
    BudgetExceeded,
    InternalCheckError,
    NotAnAutomorphism,
    VertexOutOfRange,
)

from conftest import bowtie, brute_transitive_digraphs, paw, star


def test_is_transitive():
    assert is_transitive(Digraph.from_arcs(3, [(0, 1), (1, 0), (0, 2), (1, 2)]))
    assert not is_transitive(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))
    # an oriented path cannot close its 2-path: endpoints are non-adjacent
    assert not is_transitive(Digraph.from_arcs(3, [(0, 1), (1, 2)]))
    assert is_transitive(Digraph.from_arcs(2, [(0, 1), (1, 0)]))
    assert is_transitive(Digraph(4, (0, 0, 0, 0)))


def test_k2_stream():
    digraphs = list(enumerate_transitive_digraphs(complete_graph(2)))
    assert [d.arcs() for d in digraphs] == [
        [(0, 1)],
        [(1, 0)],
        [(0, 1), (1, 0)],
    ]


def test_triangle_stream():
    digraphs = list(enumerate_transitive_digraphs(complete_graph(3)))
    assert len(digraphs) == 13
    assert h_classes(complete_graph(3)) == 4
    assert len(set(digraphs)) == 13  # no duplicates


def test_odd_cycles_are_empty():
    assert list(enumerate_transitive_digraphs(cycle_graph(5))) == []
    assert tau(cycle_graph(7)) == 0


@pytest.mark.parametrize(
    "g",
    [
        path_graph(2),
        path_graph(3),
        complete_graph(3),
        complete_graph(4),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        star(3),
        paw(),
        bowtie(),
        wheel_graph(5),
        disjoint_union(complete_graph(2), complete_graph(2)),
    ],
)
def test_stream_matches_brute_force(g):
    engine = {frozenset(d.arcs()) for d in enumerate_transitive_digraphs(g)}
    brute = set(brute_transitive_digraphs(g))
    assert engine == brute
    assert tau(g) == len(brute)


@pytest.mark.parametrize(
    "g", [complete_graph(4), cycle_graph(6), paw(), wheel_graph(5), star(4)]
)
def test_underlying_graph_is_exact(g):
    for d in enumerate_transitive_digraphs(g):
        assert underlying_graph(d) == g


def test_tau_values():
    assert tau(complete_graph(4)) == 75
    assert tau(path_graph(2)) == 2
    assert tau(cartesian_product(complete_graph(2), cycle_graph(3))) == 0


def test_budget():
    big = cartesian_product(cycle_graph(4), cycle_graph(4))  # 32 edges
    with pytest.raises(BudgetExceeded):
        tau(big)
    assert tau(big, budget_edges=32) == 2


def test_fix_count_examples():
    k2 = complete_graph(2)
    assert fix_count(k2, (0, 1)) == 3
    assert fix_count(k2, (1, 0)) == 1  # only the doubled edge survives the swap
    assert fix_count(complete_graph(3), (0, 1, 2)) == 13
    with pytest.raises(NotAnAutomorphism):
        fix_count(path_graph(2), (1, 0, 2))
    with pytest.raises(NotAnAutomorphism):
        fix_count(k2, (0, 0))


@pytest.mark.parametrize(
    "g", [complete_graph(3), cycle_graph(4), cycle_graph(6), paw(), wheel_graph(5)]
)
def test_fix_count_matches_filter(g):
    stream = [frozenset(d.arcs()) for d in enumerate_transitive_digraphs(g)]
    for sigma in automorphism_group(g):
        fixed = sum(
            1
            for arcs in stream
            if {(sigma[u], sigma[v]) for u, v in arcs} == set(arcs)
        )
        assert fix_count(g, sigma) == fixed


def test_h_burnside_values():
    assert h_burnside(complete_graph(2)) == 2
    assert h_burnside(complete_graph(3)) == 4
    assert h_burnside(wheel_graph(5)) == 3  # pinned by the brute-force stream


def test_h_classes_values():
    assert h_classes(complete_graph(4)) == 8
    assert h_classes(wheel_graph(7)) == 2
    assert h_classes(cycle_graph(6)) == 1


def test_class_representatives():
    reps = transitive_digraph_classes(complete_graph(3))
    assert len(reps) == 4
    all_digraphs = {frozenset(d.arcs()) for d in enumerate_transitive_digraphs(complete_graph(3))}
    for rep in reps:
        assert frozenset(rep.arcs()) in all_digraphs
    # lexicographically least member of each class
    assert reps[0].arcs() == [(0, 1), (0, 2), (1, 2)]


def test_sink_counts():
    k2 = complete_graph(2)
    assert tau_sink(k2, 0) == 1  # only 1 -> 0
    assert tau_sink(k2, 1) == 1

    k3 = complete_graph(3)
    assert tau_sink(k3, 0) == 3
    assert h_sink(k3, 0) == 2

    assert tau_sink(cycle_graph(4), 0) == 1

    with pytest.raises(VertexOutOfRange):
        tau_sink(k2, 5)


def test_sink_counts_brute():
    for g in [complete_graph(3), cycle_graph(4), paw(), bowtie(), star(3)]:
        stream = brute_transitive_digraphs(g)
        for u in range(g.n):
            expected = sum(
                1 for arcs in stream if not any(a == u for a, _ in arcs)
            )
            assert tau_sink(g, u) == expected


def test_sink_equals_source():
    for g in [complete_graph(3), cycle_graph(4), paw(), wheel_graph(5)]:
        stream = [d for d in enumerate_transitive_digraphs(g)]
        for u in range(g.n):
            sources = sum(1 for d in stream if not d.reverse().out[u])
            assert tau_sink(g, u) == sources


def test_reversal_closure():
    for g in [complete_graph(3), cycle_graph(4), paw(), wheel_graph(5)]:
        stream = {d.out for d in enumerate_transitive_digraphs(g)}
        assert {d.reverse().out for d in enumerate_transitive_digraphs(g)} == stream


def test_bowtie_sink_structure():
    bt = bowtie()
    assert tau_sink(bt, 0) == 9
    assert h_sink(bt, 0) == 3
    assert tau(bt) == 18


def test_worker_determinism():
    g = cartesian_product(complete_graph(2), cycle_graph(4))
    single = list(stream_masks(g))
    assert list(stream_masks(g, workers=4)) == single
    assert tau(g, workers=4) == tau(g) == len(single)


def test_empty_graph_has_one_digraph():
    from graphtop import null_graph

    assert tau(null_graph(3)) == 1
    assert h_burnside(null_graph(3)) == 1
    assert [d.arcs() for d in enumerate_transitive_digraphs(null_graph(2))] == [[]]


def test_counts_for_memoizes():
    cache = {}
    first = counts_for(complete_graph(3), cache=cache)
    assert first == (13, 4)
    assert len(cache) == 1
    (code, value), = cache.items()
    cache[code] = (99, 4)
    assert counts_for(complete_graph(3), cache=cache) == (99, 4)  # hit, not recomputed


def test_count_report_invariant():
    report = CountReport(graph=(2, 1), tau=3, h=2, method="enumeration", elapsed=0.0)
    assert report.tau == 3
    with pytest.raises(InternalCheckError):
        CountReport(graph=(2, 1), tau=1, h=2, method="enumeration", elapsed=0.0)
    with pytest.raises(InternalCheckError):
        CountReport(graph=(2, 1), tau=3, h=0, method="enumeration", elapsed=0.0)
