from itertools import combinations, permutations

import pytest

from dhtrees.families import (complete, complete_bipartite, complete_multipartite, cycle,
                              ferrers_young, inversion_graph, is_separable, path, star,
                              superprism, threshold_graph)
from dhtrees.graph import Graph
from dhtrees.linalg import tree_count
from dhtrees.recognition import is_cograph, is_threshold


def test_standard_families():
    c4 = cycle(4)
    assert (c4.n, c4.m, set(c4.degree_sequence())) == (4, 4, {2})
    assert complete_bipartite(2, 3).degree_sequence() == [3, 3, 2, 2, 2]
    assert complete_multipartite([1, 1, 1]) == complete(3)
    assert path(1).n == 1
    for bad in (lambda: cycle(2), lambda: complete(0), lambda: complete_multipartite([2, 0])):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n", range(4, 13))
def test_superprism_is_4_regular(n):
    g = superprism(n)
    assert g.n == 2 * n and g.m == 4 * n
    assert set(g.degree_sequence()) == {4}
    # u_i, v_i share a pair and are never adjacent
    assert not any(g.has_edge(2 * i, 2 * i + 1) for i in range(n))


def test_superprism_small():
    assert superprism(5).m == 20
    assert tree_count(superprism(4)) == 4096
    with pytest.raises(ValueError):
        superprism(3)


def test_ferrers_young():
    g, cert = ferrers_young([2, 1])
    assert g == path(4).relabel({0: 3, 1: 0, 2: 2, 3: 1})
    assert set(g.edges()) == {(0, 2), (0, 3), (1, 2)}
    cert.validate(g)
    g, _ = ferrers_young([2, 2])
    assert g == cycle(4).relabel({1: 2, 2: 1})
    assert ferrers_young([1])[0] == complete(2)
    for bad in ([], [1, 2], [2, 0]):
        with pytest.raises(ValueError):
            ferrers_young(bad)


@pytest.mark.parametrize("parts", [(3, 3, 1), (4, 2, 2, 1), (1, 1, 1, 1), (5,)])
def test_ferrers_young_connected_bipartite(parts):
    g, cert = ferrers_young(parts)
    assert g.is_connected()
    cert.validate(g)


def test_threshold_examples():
    assert threshold_graph(["isolated", "dominating"]) == complete(2)
    assert threshold_graph(["isolated", "isolated", "dominating"]) == star(2).relabel({0: 2, 2: 0})
    assert threshold_graph(["isolated", "dominating", "dominating"]) == complete(3)
    with pytest.raises(ValueError):
        threshold_graph([])


FORBIDDEN_IN_THRESHOLD = [path(4), cycle(4), Graph.from_edges(range(4), [(0, 1), (2, 3)])]


def _has_induced(g, pattern):
    from itertools import permutations as perms
    want = {frozenset(e) for e in pattern.edges()}
    for sub in combinations(g.vertices, pattern.n):
        for order in perms(sub):
            pos = {v: i for i, v in enumerate(order)}
            if {frozenset((pos[u], pos[v])) for u, v in g.induced(sub).edges()} == want:
                return True
    return False


@pytest.mark.parametrize("bits", range(0, 512, 7))
def test_threshold_graphs_avoid_p4_c4_2k2(bits):
    seq = ["i"] + ["d" if bits >> k & 1 else "i" for k in range(9)]
    g = threshold_graph(seq)
    assert g.n == 10 and is_threshold(g)
    assert not any(_has_induced(g, p) for p in FORBIDDEN_IN_THRESHOLD)


def test_inversion_graph():
    assert inversion_graph([2, 1]) == complete(2).relabel({0: 1, 1: 2})
    assert inversion_graph([1, 2, 3]).m == 0
    assert inversion_graph([3, 2, 1]) == complete(3).relabel({0: 1, 1: 2, 2: 3})
    with pytest.raises(ValueError):
        inversion_graph([1, 1])


def test_is_separable_examples():
    assert not is_separable([2, 4, 1, 3])
    assert not is_separable([3, 1, 4, 2])
    assert is_separable([3, 2, 1])
    assert is_separable([2, 1, 4, 3])


def test_separable_iff_inversion_graph_is_cograph():
    for n in range(1, 7):
        for w in permutations(range(1, n + 1)):
            assert is_separable(w) == bool(is_cograph(inversion_graph(w))), w
