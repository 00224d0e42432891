import random

import networkx as nx
import pytest

from tfextremal.constructions import construct_Ad
from tfextremal.graph import Graph, is_factor_critical
from tfextremal.oracle.canon import canonical_form, graph_certificate
from tfextremal.oracle.enumerate import (
    All,
    AlmostRegular,
    BudgetExceeded,
    EnumFilter,
    Regular,
    default_budget,
    enumerate_graphs,
    generate,
)

from naive import naive_class_counts


def count(n, max_degree, triangle_free=True, connected=False, profile=All()):
    flt = EnumFilter(n, max_degree, triangle_free=triangle_free, connected=connected, degree_profile=profile)
    return sum(1 for _ in enumerate_graphs(flt))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("tf", [True, False])
@pytest.mark.parametrize("conn", [True, False])
def test_counts_match_naive_dedupe(n, tf, conn):
    for delta in sorted({2, 3, n - 1}):
        if delta < 0:
            continue
        assert count(n, delta, tf, conn) == naive_class_counts(n, delta, tf, conn), (n, delta)


def test_all_graph_counts():
    # graphs on n vertices: 1, 2, 4, 11, 34, 156, 1044
    got = [sum(1 for r in generate(7, 6, triangle_free=False) if len(r) == n) for n in range(1, 8)]
    assert got == [1, 2, 4, 11, 34, 156, 1044]


def test_triangle_free_counts():
    # triangle-free graphs on n vertices: 1, 2, 3, 7, 14, 38, 107, 410, 1897
    got = [sum(1 for r in generate(9, 8) if len(r) == n) for n in range(1, 10)]
    assert got == [1, 2, 3, 7, 14, 38, 107, 410, 1897]


def test_cubic_girth_four_count():
    # connected cubic triangle-free graphs on 12 vertices: 22
    assert count(12, 3, connected=True, profile=Regular(3)) == 22


def test_spec_examples():
    reps = list(enumerate_graphs(EnumFilter(5, 2, connected=True)))
    assert sorted(g.num_edges for g in reps) == [4, 5]
    hits = list(enumerate_graphs(EnumFilter(7, 3, connected=True, degree_profile=AlmostRegular(3))))
    a3 = graph_certificate(construct_Ad(3).rows)
    assert a3 in {graph_certificate(g.rows) for g in hits}
    assert count(3, 2, connected=False) == 3  # empty, K2+K1, P3


def test_no_four_regular_factor_critical_on_nine():
    flt = EnumFilter(9, 4, connected=True, degree_profile=Regular(4))
    assert list(enumerate_graphs(flt, extra=is_factor_critical)) == []


def test_filter_validation_and_budget():
    with pytest.raises(ValueError):
        EnumFilter(0, 2)
    with pytest.raises(ValueError):
        EnumFilter(1, 2, degree_profile=AlmostRegular(2))
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(EnumFilter(14, 3)))
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(EnumFilter(17, 3), budget=17))


def test_env_budget(monkeypatch):
    monkeypatch.setenv("EXTREMAL_BUDGET", "9")
    assert default_budget() == 9
    monkeypatch.setenv("EXTREMAL_BUDGET", "40")
    with pytest.raises(ValueError):
        default_budget()


def test_certificate_is_isomorphism_invariant():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        G = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**6))
        g = Graph(n, G.edges())
        perm = list(range(n))
        rng.shuffle(perm)
        assert graph_certificate(g.rows) == graph_certificate(g.relabel(perm).rows)


def test_certificate_separates_non_isomorphic():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 9)
        G = nx.gnp_random_graph(n, 0.5, seed=rng.randint(0, 10**6))
        H = nx.gnp_random_graph(n, 0.5, seed=rng.randint(0, 10**6))
        same = graph_certificate(Graph(n, G.edges()).rows) == graph_certificate(Graph(n, H.edges()).rows)
        assert same == nx.is_isomorphic(G, H)


def test_canonical_labelling_reproduces_certificate():
    g = construct_Ad(5)
    cert, lab = canonical_form(g.rows)
    pos = {v: i for i, v in enumerate(lab)}
    assert tuple(g.relabel([pos[v] for v in range(g.n)]).rows) == cert
