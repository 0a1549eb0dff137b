"""Independent reference computations and hypothesis strategies for the tests."""

from collections import Counter
from itertools import combinations

from hypothesis import strategies as st

from dhtrees.graph import Graph
from dhtrees.poly import SparsePoly


def naive_spanning_trees(g: Graph):
    """Every (n-1)-edge subset that is acyclic, found by union-find."""
    order = g.vertices
    for subset in combinations(g.edges(), g.n - 1):
        parent = {v: v for v in order}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        ok = True
        for u, v in subset:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            yield subset


def naive_enumerator(g: Graph) -> SparsePoly:
    acc = Counter()
    for tree in naive_spanning_trees(g):
        deg = Counter(v for e in tree for v in e)
        acc[tuple(sorted((v, deg[v] - 1) for v in g.vertices if deg[v] > 1))] += 1
    return SparsePoly(acc)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges, then a random relabeling."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if draw(st.booleans()):
            edges.add((u, v))
    labels = draw(st.permutations(range(n)))
    return Graph.from_edges(labels, [(labels[u], labels[v]) for u, v in edges])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    edges = [e for e in combinations(range(n), 2) if draw(st.booleans())]
    return Graph.from_edges(range(n), edges)


def nonzero_rationals():
    return st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(lambda q: q != 0)
