"""Exact linear algebra for spanning-tree counting.

Determinants are computed by fraction-free (Bareiss) elimination over Python
integers.  Rational matrices are first cleared of denominators row by row.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import lcm, prod
from typing import Mapping, Sequence

from .errors import EnvelopeExceeded
from .graph import Graph
from .poly import SparsePoly

Number = int | Fraction
Matrix = list[list[Number]]

BRUTE_FORCE_MAX_VERTICES = 9
BRUTE_FORCE_MAX_TREES = 10**6


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix; every intermediate stays integral."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def determinant(m: Sequence[Sequence[Number]]) -> Number:
    """Exact determinant of an integer or rational square matrix."""
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix is not square")
    if all(isinstance(x, int) for row in m for x in row):
        return bareiss_det(m)
    scale = 1
    rows = []
    for row in m:
        d = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scale *= d
        rows.append([int(Fraction(x) * d) for x in row])
    return Fraction(bareiss_det(rows), scale)


def minor(m: Sequence[Sequence[Number]], i: int) -> Matrix:
    """Delete row ``i`` and column ``i``."""
    return [[x for c, x in enumerate(row) if c != i] for r, row in enumerate(m) if r != i]


def laplacian(g: Graph, weights: Mapping[int, Number] | None = None) -> Matrix:
    """Rows and columns follow ``g.vertices``.

    With ``weights`` the edge ``uv`` carries ``x_u * x_v`` and the diagonal
    holds the row sums, so cofactors give ``sum_T prod_v x_v ** deg_T(v)``.
    """
    order = g.vertices
    index = {v: i for i, v in enumerate(order)}
    if weights is not None:
        missing = [v for v in order if v not in weights]
        if missing:
            raise KeyError(f"missing weight for vertices {missing}")
    n = len(order)
    lap: Matrix = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        w = 1 if weights is None else weights[u] * weights[v]
        i, j = index[u], index[v]
        lap[i][j] -= w
        lap[j][i] -= w
        lap[i][i] += w
        lap[j][j] += w
    return lap


def tree_count(g: Graph, delete: int = 0) -> int:
    """Number of spanning trees via the cofactor at position ``delete``."""
    if g.n == 0:
        return 0
    return int(determinant(minor(laplacian(g), delete)))


def weighted_tree_sum(g: Graph, x: Mapping[int, Number]) -> Number:
    """``sum_T prod_v x_v ** deg_T(v)`` as a cofactor of the weighted Laplacian."""
    if g.n == 0:
        return 0
    return determinant(minor(laplacian(g, x), 0))


def rooted_tree_sum(g: Graph, x: Mapping[int, Number], root: int) -> Number:
    """``x_root * P_G(x)`` via spanning arborescences directed away from ``root``.

    Each non-root vertex contributes the value of its parent, so no division
    by coordinates is needed; zero coordinates are allowed.
    """
    order = [v for v in g.vertices if v != root]
    index = {v: i for i, v in enumerate(order)}
    m: Matrix = [[0] * len(order) for _ in order]
    for v in order:
        i = index[v]
        for u in g.neighbors(v):
            m[i][i] += x[u]
            if u != root:
                m[index[u]][i] -= x[u]
    return determinant(m)


def enumerator_value(g: Graph, x: Mapping[int, Number]) -> Number:
    """Exact value of the vertex spanning enumerator ``P_G`` at ``x``.

    Nonzero points use the weighted Laplacian divided by ``prod x``; points
    with zero coordinates go through the rooted arborescence determinant.
    """
    if g.n < 2:
        raise ValueError("enumerator is a polynomial only for graphs on >= 2 vertices")
    missing = [v for v in g.vertices if v not in x]
    if missing:
        raise KeyError(f"missing coordinate for vertices {missing}")
    if all(x[v] != 0 for v in g.vertices):
        val = Fraction(weighted_tree_sum(g, x)) / prod(Fraction(x[v]) for v in g.vertices)
    else:
        root = next((v for v in g.vertices if x[v] != 0), None)
        if root is None:
            return 1 if g.n == 2 and g.m == 1 else 0
        val = Fraction(rooted_tree_sum(g, x, root)) / Fraction(x[root])
    return val.numerator if val.denominator == 1 else val


def det_rank_one_check(g: Graph, a: Sequence[Number], b: Sequence[Number]) -> tuple[Number, Number, bool]:
    """Compare ``det(L + a b^T)`` with ``sum(a) * sum(b) * tau(G)``."""
    n = g.n
    if len(a) != n or len(b) != n:
        raise ValueError(f"vectors must have length {n}")
    lap = laplacian(g)
    pert = [[lap[i][j] + a[i] * b[j] for j in range(n)] for i in range(n)]
    lhs = determinant(pert)
    rhs = sum(a) * sum(b) * tree_count(g)
    return lhs, rhs, lhs == rhs


def _is_bridge(edges, rep, ru: int, rv: int) -> bool:
    """Whether the super-vertices ``ru`` and ``rv`` are disconnected by ``edges``."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        ra, rb = rep[a], rep[b]
        if (ra == ru and rb == rv) or (ra == rv and rb == ru):
            return False
        adj.setdefault(ra, []).append(rb)
        adj.setdefault(rb, []).append(ra)
    seen = {ru}
    stack = [ru]
    while stack:
        c = stack.pop()
        for d in adj.get(c, ()):
            if d == rv:
                return False
            if d not in seen:
                seen.add(d)
                stack.append(d)
    return True


def brute_force_enumerator(g: Graph, max_vertices: int | None = None,
                           max_trees: int | None = None) -> SparsePoly:
    """Expand ``P_G`` by enumerating every spanning tree once.

    Deletion-contraction on the edge list: the first live edge is either
    contracted (it joins the tree and bumps both endpoint degrees) or deleted
    (skipped when it is a bridge of what remains).
    """
    max_vertices = BRUTE_FORCE_MAX_VERTICES if max_vertices is None else max_vertices
    max_trees = BRUTE_FORCE_MAX_TREES if max_trees is None else max_trees
    if g.n < 2:
        raise ValueError("enumerator is a polynomial only for graphs on >= 2 vertices")
    if g.n > max_vertices and tree_count(g) > max_trees:
        raise EnvelopeExceeded(
            f"brute force limited to {max_vertices} vertices or {max_trees} trees")
    if not g.is_connected():
        return SparsePoly()
    order = g.vertices
    index = {v: i for i, v in enumerate(order)}
    deg = [0] * len(order)
    found: Counter = Counter()

    # every state reached is connected, so deleting an edge is legal unless it is a bridge
    def rec(edges: list[tuple[int, int]], rep: list[int], k: int) -> None:
        if k == 1:
            found[tuple(deg)] += 1
            return
        (u, v), rest = edges[0], edges[1:]
        ru, rv = rep[u], rep[v]
        merged = [ru if r == rv else r for r in rep]
        live = [e for e in rest if merged[e[0]] != merged[e[1]]]
        deg[u] += 1
        deg[v] += 1
        rec(live, merged, k - 1)
        deg[u] -= 1
        deg[v] -= 1
        if len(rest) >= k - 1 and not _is_bridge(rest, rep, ru, rv):
            rec(rest, rep, k)

    rec([(index[u], index[v]) for u, v in g.edges()], list(range(len(order))), len(order))
    return SparsePoly.from_exponents(
        ({order[i]: d - 1 for i, d in enumerate(degs)}, c) for degs, c in found.items())


def format_matrix(m: Sequence[Sequence[Number]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m)
