"""Generators for the named graph families."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import BipartitionCert, Graph


def _check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def _check_diagram(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise ValueError("Ferrers diagram must be nonempty")
    if any(p <= 0 for p in parts):
        raise ValueError(f"Ferrers diagram parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"Ferrers diagram parts must be weakly decreasing: {parts}")
    return parts


def edgeless(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(range(n), [])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(range(n), combinations(range(n), 2))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s <= 0 for s in sizes):
        raise ValueError(f"part sizes must be positive: {list(sizes)}")
    label, parts = 0, []
    for s in sizes:
        parts.append(range(label, label + s))
        label += s
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return Graph.from_edges(range(label), edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return complete_bipartite(1, leaves)


def wheel(k: int) -> Graph:
    """Cycle on 0..k-1 plus an apex with id k."""
    rim = cycle(k)
    return Graph.from_edges(range(k + 1), rim.edges() + [(i, k) for i in range(k)])


def gem() -> Graph:
    """P4 on 1-2-3-4 (ids 0..3) plus apex 4."""
    return Graph.from_edges(range(5), [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)])


def house() -> Graph:
    """5-cycle 0..4 with the chord 1-4 (square 1-2-3-4, roof 0)."""
    return Graph.from_edges(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def domino() -> Graph:
    """Two squares sharing the edge 1-4."""
    return Graph.from_edges(range(6), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])


def superprism(n: int) -> Graph:
    """4-regular superprism: pair i is {u_i = 2i, v_i = 2i+1}, consecutive pairs fully joined."""
    if n < 4:
        raise ValueError("superprism needs n >= 4")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(a, b) for a in (2 * i, 2 * i + 1) for b in (2 * j, 2 * j + 1)]
    return Graph.from_edges(range(2 * n), edges)


def ferrers_young(parts: Sequence[int]) -> tuple[Graph, BipartitionCert]:
    """Row vertices 0..k-1, column vertices k..k+parts[0]-1; row i meets column j iff j < parts[i]."""
    parts = _check_diagram(parts)
    k = len(parts)
    edges = [(i, k + j) for i, p in enumerate(parts) for j in range(p)]
    g = Graph.from_edges(range(k + parts[0]), edges)
    return g, BipartitionCert(frozenset(range(k)), frozenset(range(k, k + parts[0])))


def threshold_graph(creation: Sequence[str]) -> Graph:
    """Build from a creation sequence of 'isolated'/'dominating' (or 'i'/'d')."""
    if not creation:
        raise ValueError("creation sequence must be nonempty")
    g = Graph({})
    for step in creation:
        kind = str(step).lower()
        if kind in ("i", "isolated"):
            g, _ = g.with_vertex([])
        elif kind in ("d", "dominating"):
            g, _ = g.with_vertex(g.vertices)
        else:
            raise ValueError(f"unknown creation step {step!r}")
    return g


def inversion_graph(w: Sequence[int]) -> Graph:
    """Vertices 1..n; i < j adjacent iff w(i) > w(j)."""
    w = _check_permutation(w)
    n = len(w)
    edges = [(i + 1, j + 1) for i, j in combinations(range(n), 2) if w[i] > w[j]]
    return Graph.from_edges(range(1, n + 1), edges)


def _pattern(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(values)
    return tuple(order.index(x) + 1 for x in values)


def is_separable(w: Sequence[int]) -> bool:
    """True iff ``w`` avoids both 2413 and 3142."""
    w = _check_permutation(w)
    for idx in combinations(range(len(w)), 4):
        if _pattern([w[i] for i in idx]) in ((2, 4, 1, 3), (3, 1, 4, 2)):
            return False
    return True
