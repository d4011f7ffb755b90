from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowrc.cli import parse_coloring, parse_graph, write_coloring, write_graph
from rainbowrc.engine import EdgeColoring, is_rainbow_connected, lower_bound, rc_exact
from rainbowrc.genlab import gen_random_connected
from rainbowrc.graph import structure_report

from .conftest import naive_rainbow, simple_path_table


@st.composite
def connected_graphs(draw, max_n=7, max_extra=4):
    n = draw(st.integers(2, max_n))
    return gen_random_connected(draw(st.integers(0, 10**6)), n, draw(st.integers(0, max_extra)))


@st.composite
def colored_graphs(draw):
    g = draw(connected_graphs())
    k = draw(st.integers(1, g.m))
    colors = draw(st.lists(st.integers(1, k), min_size=g.m, max_size=g.m))
    return g, colors


@settings(max_examples=200, deadline=None)
@given(colored_graphs())
def test_verifier_agrees_with_naive(case):
    g, colors = case
    assert bool(is_rainbow_connected(g, colors)) == naive_rainbow(simple_path_table(g), colors)


@settings(max_examples=100, deadline=None)
@given(colored_graphs())
def test_failure_witness_has_no_rainbow_path(case):
    g, colors = case
    verdict = is_rainbow_connected(g, colors)
    if not verdict:
        u, v = sorted(verdict.witness)
        paths = simple_path_table(g)[(u, v)]
        assert not any(len({colors[e] for e in p}) == len(p) for p in paths)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=6, max_extra=3))
def test_rc_between_lower_bound_and_m(g):
    rc = rc_exact(g)
    assert lower_bound(g)[0] <= rc.value <= g.m
    assert len(structure_report(g).bridges) <= rc.value
    assert rc.certificate.num_colors == rc.value and is_rainbow_connected(g, rc.certificate)


@settings(max_examples=100, deadline=None)
@given(colored_graphs())
def test_file_round_trip(case):
    g, colors = case
    assert parse_graph(write_graph(g)) == g
    c = EdgeColoring.normalized(colors)
    assert parse_coloring(write_coloring(c), g.m) == c
