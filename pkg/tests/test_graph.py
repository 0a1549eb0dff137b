import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhtrees.errors import UnknownVertex
from dhtrees.families import complete, complete_bipartite, cycle, gem, path, star, wheel
from dhtrees.graph import (Graph, add_pendant, bipartition, blow_up, compose_graphs, cone,
                           duplicate, format_graph, graph_from_json, graph_to_json,
                           neighborhood, parse_graph)
from oracles import connected_graphs, graphs


def test_neighborhood_examples():
    assert neighborhood(Graph.from_edges([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]), 1) == {2, 4}
    assert neighborhood(complete(4), 2) == {0, 1, 3}
    assert neighborhood(star(3), 0) == {1, 2, 3}
    with pytest.raises(UnknownVertex):
        neighborhood(complete(3), 7)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph({0: [0]})
    with pytest.raises(ValueError):
        Graph({0: [1], 1: []})
    with pytest.raises(UnknownVertex):
        Graph.from_edges([0, 1], [(0, 2)])


def test_add_pendant():
    k1 = Graph({0: ()})
    k2, new = add_pendant(k1, 0)
    assert new == 1 and k2 == complete(2)
    p3, _ = add_pendant(path(2), 1)
    assert p3 == path(3)
    g, v = add_pendant(cycle(4), 2)
    assert (g.n, g.m, g.degree(v)) == (5, 5, 1)
    with pytest.raises(UnknownVertex):
        add_pendant(k1, 5)


def test_duplicate():
    assert duplicate(complete(2), 1, True)[0] == complete(3)
    k12, _ = duplicate(complete(2), 1, False)
    assert k12 == star(2)
    g, _ = duplicate(cycle(4), 0, False)
    assert g.degree_sequence() == [3, 3, 2, 2, 2]


def test_ids_are_not_recycled():
    g, v = add_pendant(cycle(4), 0)
    h = g.remove_vertex(v)
    _, w = add_pendant(h, 0)
    assert w != v


def test_cone_examples():
    assert cone(Graph({0: ()}))[0] == complete(2)
    assert cone(path(4))[0] == gem()
    w4, apex = cone(cycle(4))
    assert w4 == wheel(4) and apex == 4


def test_compose_examples():
    h, _ = compose_graphs(complete(2), 1, complete(2), 1)
    assert h.n == 2 and h.m == 1
    w = wheel(5)
    h, shift = compose_graphs(w, 5, w, 5)
    assert h.n == 10 and h.m == 35
    rims = [set(range(5)), {shift[i] for i in range(5)}]
    for a in rims[0]:
        assert rims[1] <= h.neighbors(a)
    assert h.induced(rims[0]) == cycle(5)


def _as_duplicate(g, v, h, shift, pair):
    """Rename the two surviving gadget vertices to v and a fresh twin id."""
    a, b = (shift[x] for x in pair)
    return h.relabel({a: v, b: g.next_id})


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_compose_with_gadgets_is_duplication(g, data):
    v = data.draw(st.sampled_from(g.vertices))
    h, shift = compose_graphs(g, v, complete(3), 0)
    assert _as_duplicate(g, v, h, shift, (1, 2)) == duplicate(g, v, True, g.next_id)[0]
    p3 = path(3)  # centre 1
    h, shift = compose_graphs(g, v, p3, 1)
    assert _as_duplicate(g, v, h, shift, (0, 2)) == duplicate(g, v, False, g.next_id)[0]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_twins_have_equal_neighbourhoods(g, data):
    v = data.draw(st.sampled_from(g.vertices))
    h, w = duplicate(g, v, False)
    assert h.neighbors(w) == h.neighbors(v)
    h, w = duplicate(g, v, True)
    assert h.neighbors(w) | {w} == h.neighbors(v) | {v}


def test_blow_up_examples():
    assert blow_up(complete(2), {0: 2, 1: 2})[0] == complete_bipartite(2, 2).relabel({1: 2, 2: 1})
    assert blow_up(cycle(5), {v: 1 for v in range(5)})[0] == cycle(5)
    assert blow_up(complete(2), {0: 2, 1: 1})[0] == star(2).relabel({0: 1, 1: 0})
    with pytest.raises(ValueError):
        blow_up(complete(2), {0: 0, 1: 1})


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.data())
def test_blow_up_counts(g, data):
    z = {v: data.draw(st.integers(1, 3)) for v in g.vertices}
    h, origin = blow_up(g, z)
    assert h.n == sum(z.values())
    assert h.m == sum(z[u] * z[v] for u, v in g.edges())
    assert set(origin) == set(h.vertices)


@given(graphs())
def test_cone_is_connected(g):
    assert cone(g)[0].is_connected()


def test_bipartition():
    cert = bipartition(cycle(6))
    cert.validate(cycle(6))
    assert bipartition(cycle(5)) is None


def test_text_round_trip():
    g = wheel(5)
    assert parse_graph(format_graph(g)) == g
    text = "# a comment\n3 2\n\n0 1\n1 2  # trailing\n"
    assert parse_graph(text) == path(3)


@pytest.mark.parametrize("bad", ["", "3\n", "2 1\n0 0\n", "2 2\n0 1\n", "2 1\n0 5\n",
                                 "2 2\n0 1\n1 0\n", "2 1\n0 x\n"])
def test_text_format_errors(bad):
    with pytest.raises(ValueError):
        parse_graph(bad)


def test_json_keeps_sparse_ids():
    g = Graph.from_edges([3, 10, 42], [(3, 42), (10, 42)])
    assert graph_from_json(graph_to_json(g)) == g
