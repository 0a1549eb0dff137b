"""Test corpora: every small graph, and seeded random samples."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .graph import Graph


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(Graph.from_edges(h.nodes, h.edges) for h in nx.graph_atlas_g())


def small_graphs(max_n: int, min_n: int = 1, connected: bool = True) -> list[Graph]:
    """One graph per isomorphism class on ``min_n..max_n`` vertices (max 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return [g for g in _atlas()
            if min_n <= g.n <= max_n and (not connected or g.is_connected())]


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.2, 0.95)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(range(n), edges)


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def dh_corpus(seed: int = 0, random_count: int = 2000, random_n: int = 7) -> list[Graph]:
    """All connected graphs on 2..6 vertices plus random connected ones on ``random_n``."""
    rng = random.Random(seed)
    return small_graphs(6, min_n=2) + [random_connected_graph(rng, random_n)
                                       for _ in range(random_count)]


def nonzero_point(rng: random.Random, vertices: Iterable[int],
                  max_num: int = 10**6, max_den: int = 100) -> dict[int, Fraction]:
    """Random rational point with no zero coordinate (signs mixed)."""
    return {v: Fraction(rng.choice((-1, 1)) * rng.randint(1, max_num), rng.randint(1, max_den))
            for v in vertices}
