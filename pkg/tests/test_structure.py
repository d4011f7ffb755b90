import random

import pytest

from rainbowrc.genlab import enum_unicyclic, gen_m_class, gen_theta
from rainbowrc.graph import build_graph, cycle_graph, relabel, structure_report
from rainbowrc.structure import (
    BadEdge,
    Cycle,
    K4MinusE,
    NotABlock,
    NotUnicyclic,
    Theta,
    block_kind,
    subdivide,
    theta_shape,
    unicyclic_decompose,
)


def _only_block(g):
    return structure_report(g).nontrivial_blocks[0].edges


def test_decompose_tri1(named):
    dec = unicyclic_decompose(named["TRI1"])
    assert dec.cycle == (0, 1, 2)
    assert dec.leaf_counts == (1, 0, 0)
    assert dec.trees[0].edges == {3}


def test_decompose_c4p(named):
    dec = unicyclic_decompose(named["C4P"])
    assert dec.cycle == (0, 1, 2, 3)
    assert dec.leaf_counts == (0, 1, 0, 0)


def test_path_counts_one_leaf():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)])
    dec = unicyclic_decompose(g)
    assert dec.leaf_counts == (1, 0, 0)
    assert dec.trees[0].is_path


def test_branching_tree_is_not_path():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)])
    dec = unicyclic_decompose(g)
    assert dec.leaf_counts == (2, 0, 0) and not dec.trees[0].is_path


def test_cycle_orientation_smallest_neighbor():
    g = build_graph(5, [(4, 0), (0, 3), (3, 1), (1, 2), (2, 4)])
    assert unicyclic_decompose(g).cycle == (0, 3, 1, 2, 4)


def test_decompose_rejects():
    with pytest.raises(NotUnicyclic):
        unicyclic_decompose(build_graph(3, [(0, 1), (1, 2)]))
    with pytest.raises(NotUnicyclic):
        unicyclic_decompose(gen_m_class(0, 0))


def test_decomposition_reassembles():
    for g in enum_unicyclic(10):
        dec = unicyclic_decompose(g)
        rep = structure_report(g)
        assert dec.s == rep.girth
        parts = [set(dec.cycle_edges)] + [set(t.edges) for t in dec.trees]
        assert sum(len(p) for p in parts) == g.m
        assert set().union(*parts) == set(range(g.m))
        assert sum(len(t.edges) for t in dec.trees) == g.m - dec.s
        for t in dec.trees:
            assert (t.leaf_count == 0) == (not t.edges)
        # trees only meet the rest of the graph at their roots
        for a in dec.trees:
            for b in dec.trees:
                if a is not b:
                    assert not (a.vertices & b.vertices)


def test_leaf_counts_invariant_under_relabeling():
    rng = random.Random(3)
    graphs = [g for g in enum_unicyclic(9) if g.n >= 7][::7]
    for g in graphs:
        profile = unicyclic_decompose(g).leaf_counts
        canon = min(profile[r:] + profile[:r] for r in range(len(profile)))
        canon = min(canon, min((profile[::-1])[r:] + (profile[::-1])[:r] for r in range(len(profile))))
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            p2 = unicyclic_decompose(relabel(g, perm)).leaf_counts
            rots = [p2[r:] + p2[:r] for r in range(len(p2))]
            rots += [(p2[::-1])[r:] + (p2[::-1])[:r] for r in range(len(p2))]
            assert min(rots) == canon


def test_block_kind_k4e(named):
    g = named["K4-e"]
    kind = block_kind(g, _only_block(g))
    assert kind == K4MinusE(0, 1, 2, 3)
    assert g.has_edge(kind.v1, kind.v3)
    assert not g.has_edge(kind.v2, kind.v4)


def test_block_kind_k4e_relabelled():
    rng = random.Random(4)
    base = gen_m_class(2, 1)
    for _ in range(50):
        perm = list(range(base.n))
        rng.shuffle(perm)
        g = relabel(base, perm)
        kind = block_kind(g, _only_block(g))
        assert isinstance(kind, K4MinusE)
        assert g.has_edge(kind.v1, kind.v3) and not g.has_edge(kind.v2, kind.v4)


def test_block_kind_cycle_and_theta():
    assert block_kind(cycle_graph(9), range(9)) == Cycle(9)
    g = gen_theta(2, 3, 4)
    kind = block_kind(g, range(g.m))
    assert isinstance(kind, Theta) and (kind.a, kind.b, kind.c) == (2, 3, 4)
    for path in kind.paths:
        assert path[0] == kind.ends[0] and path[-1] == kind.ends[1]
    inner = [set(p[1:-1]) for p in kind.paths]
    assert not (inner[0] & inner[1]) and not (inner[1] & inner[2]) and not (inner[0] & inner[2])


def test_block_kind_rejects_non_block(named):
    with pytest.raises(NotABlock):
        block_kind(named["TRI1"], {0, 1})
    with pytest.raises(NotABlock):
        block_kind(named["TRI1"], {3})


def test_theta_shape_k4e_is_122(named):
    shape = theta_shape(named["K4-e"])
    assert (shape.a, shape.b, shape.c) == (1, 2, 2)
    assert theta_shape(named["bowtie"]) is None


def test_subdivide_triangle_gives_c4(named):
    h = subdivide(named["triangle"], 1, 1)
    assert (h.n, h.m) == (4, 4)
    assert structure_report(h).is_cycle


def test_subdivide_theta():
    g = gen_theta(1, 2, 3)
    h = subdivide(g, 5, 1)  # an edge of the length-3 path
    shape = theta_shape(h)
    assert (shape.a, shape.b, shape.c) == (1, 2, 4)


def test_subdivide_rejects(named):
    with pytest.raises(BadEdge):
        subdivide(named["triangle"], 0, 0)
    with pytest.raises(BadEdge):
        subdivide(named["triangle"], 3, 1)


def test_subdivide_preserves_cyclomatic_and_blocks():
    rng = random.Random(5)
    for g in list(enum_unicyclic(7))[::3] + [gen_m_class(1, 2), gen_theta(2, 2, 3)]:
        e = rng.randrange(g.m)
        t = rng.randint(1, 3)
        h = subdivide(g, e, t)
        rg, rh = structure_report(g), structure_report(h)
        assert (h.n, h.m) == (g.n + t, g.m + t)
        assert rg.cyclomatic == rh.cyclomatic
        assert len(rg.blocks) + (t if e in rg.bridges else 0) == len(rh.blocks)
