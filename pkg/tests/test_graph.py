import itertools
import math
import random

import networkx as nx
import pytest

from rainbowrc.graph import (
    INF,
    Disconnected,
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    build_graph,
    complete_graph,
    cycle_graph,
    distance,
    path_graph,
    structure_report,
)
from rainbowrc.genlab import gen_random_connected, gen_random_unicyclic
from rainbowrc.structure import unicyclic_decompose

from .conftest import to_nx


def test_build_triangle_and_c4():
    tri = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.m == 3
    assert tri.edges == ((0, 1), (1, 2), (0, 2))
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.m == 4 and c4.edge_index(0, 3) == 3


@pytest.mark.parametrize("n, pairs, exc", [
    (3, [(0, 1), (0, 1)], DuplicateEdge),
    (3, [(0, 1), (1, 0)], DuplicateEdge),
    (3, [(1, 1)], SelfLoop),
    (3, [(0, 3)], VertexOutOfRange),
    (0, [], VertexOutOfRange),
])
def test_build_rejects(n, pairs, exc):
    with pytest.raises(exc):
        build_graph(n, pairs)


def test_report_c5():
    r = structure_report(cycle_graph(5))
    assert (r.girth, r.diameter, r.bridges) == (5, 2, frozenset())
    assert len(r.blocks) == 1 and not r.blocks[0].trivial
    assert r.is_cycle and not r.is_tree and r.cyclomatic == 1


def test_report_path():
    r = structure_report(path_graph(4))
    assert r.is_tree and len(r.bridges) == 3 and r.girth == INF
    assert all(b.trivial for b in r.blocks)


def test_report_tri1(named):
    g = named["TRI1"]
    r = structure_report(g)
    assert sorted(sorted(b.edges) for b in r.blocks) == [[0, 1, 2], [3]]
    assert r.bridges == {3} and r.girth == 3 and r.cyclomatic == 1


def test_report_disconnected():
    r = structure_report(build_graph(4, [(0, 1), (2, 3)]))
    assert not r.connected and r.diameter == INF and not r.is_tree


def test_complete_flags():
    assert structure_report(complete_graph(5)).is_complete
    assert not structure_report(cycle_graph(5)).is_complete


def test_distance():
    c7 = cycle_graph(7)
    assert distance(c7, 0, 3) == 3 and distance(c7, 0, 4) == 3
    assert distance(c7, 5, 5) == 0
    k4 = complete_graph(4)
    assert all(distance(k4, u, v) == 1 for u, v in itertools.combinations(range(4), 2))
    with pytest.raises(Disconnected):
        distance(build_graph(3, [(0, 1)]), 0, 2)


@pytest.mark.parametrize("k", range(3, 13))
def test_cycle_diameter(k):
    assert structure_report(cycle_graph(k)).diameter == k // 2


def _random_connected(rng):
    n = rng.randint(2, 12)
    extra = rng.randint(0, n)
    return gen_random_connected(rng.randrange(10**9), n, extra)


def test_blocks_partition_edges():
    rng = random.Random(7)
    for _ in range(1000):
        g = _random_connected(rng)
        r = structure_report(g)
        assert sum(len(b.edges) for b in r.blocks) == g.m
        assert set().union(*(b.edges for b in r.blocks)) == set(range(g.m))
        assert r.bridges == {e for b in r.blocks if b.trivial for e in b.edges}
        assert r.cyclomatic == g.m - g.n + 1


def test_blocks_match_networkx():
    rng = random.Random(8)
    for _ in range(300):
        g = _random_connected(rng)
        expected = sorted(sorted(g.edge_index(*e) for e in comp)
                          for comp in nx.biconnected_component_edges(to_nx(g)))
        got = sorted(sorted(b.edges) for b in structure_report(g).blocks)
        assert got == expected


def test_bridge_iff_on_no_cycle():
    rng = random.Random(9)
    for _ in range(300):
        g = _random_connected(rng)
        if g.m > 20:
            continue
        h = to_nx(g)
        removal = set()
        for e, (u, v) in enumerate(g.edges):
            h.remove_edge(u, v)
            if not nx.is_connected(h):
                removal.add(e)
            h.add_edge(u, v)
        assert structure_report(g).bridges == removal


def test_girth_matches_networkx():
    rng = random.Random(10)
    for _ in range(300):
        g = _random_connected(rng)
        expected = nx.girth(to_nx(g))
        got = structure_report(g).girth
        assert got == expected or (math.isinf(got) and math.isinf(expected))


def test_girth_of_unicyclic_is_cycle_length():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(3, 12)
        s = rng.randint(3, n)
        g = gen_random_unicyclic(rng.randrange(10**6), n, s)
        assert structure_report(g).girth == len(unicyclic_decompose(g).cycle) == s
