"""Exact checks of the Ehrenborg inequality for bipartite graphs.

Numeric form:     tau(G) * |V1| * |V2|  <=  prod_v deg(v)
Polynomial form:  P_G(x) * sum_{V1} x * sum_{V2} x  <=  prod_v sum_{u ~ v} x_u
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping

from .errors import EnvelopeExceeded
from .graph import BipartitionCert, Graph, blow_up, graph_hash
from .families import ferrers_young
from .linalg import enumerator_value, tree_count

log = logging.getLogger(__name__)

BLOWUP_MAX_VERTICES = 60


@dataclass(frozen=True)
class EhrenborgReport:
    lhs: Fraction | int
    rhs: Fraction | int
    holds: bool
    ratio: Fraction | None
    graph: str = ""
    n: int = 0
    m: int = 0
    kind: str = "numeric"

    def line(self) -> str:
        ratio = "nan" if self.ratio is None else str(self.ratio)
        return "\t".join([self.graph, str(self.n), str(self.m), str(self.lhs),
                          str(self.rhs), ratio, "true" if self.holds else "false"])


def _report(g: Graph, lhs, rhs, kind: str) -> EhrenborgReport:
    ratio = Fraction(lhs) / Fraction(rhs) if rhs != 0 else None
    return EhrenborgReport(lhs, rhs, lhs <= rhs, ratio, graph_hash(g), g.n, g.m, kind)


def _validated(g: Graph, cert: BipartitionCert) -> None:
    cert.validate(g)
    if not g.is_connected():
        raise ValueError("Ehrenborg checks need a connected graph")


def check_numeric(g: Graph, cert: BipartitionCert) -> EhrenborgReport:
    _validated(g, cert)
    lhs = tree_count(g) * len(cert.part1) * len(cert.part2)
    rhs = prod(g.degree(v) for v in g.vertices)
    return _report(g, lhs, rhs, "numeric")


def check_polynomial(g: Graph, cert: BipartitionCert,
                     x: Mapping[int, Fraction | int]) -> EhrenborgReport:
    _validated(g, cert)
    if any(x[v] < 0 for v in g.vertices):
        raise ValueError("Ehrenborg points must be nonnegative")
    value = enumerator_value(g, x)
    lhs = value * sum(x[v] for v in cert.part1) * sum(x[v] for v in cert.part2)
    rhs = prod(sum(x[u] for u in g.neighbors(v)) for v in g.vertices)
    return _report(g, _plain(lhs), _plain(rhs), "polynomial")


def _plain(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else q


def blowup_identity(g: Graph, z: Mapping[int, int]) -> tuple[int, Fraction | int]:
    """Both sides of ``tau(blow_up(G, z)) = P_G(z) * prod_i (sum_{j~i} z_j) ** (z_i - 1)``."""
    if not g.is_connected():
        raise ValueError("blow-up identity needs a connected graph")
    if sum(z[v] for v in g.vertices) > BLOWUP_MAX_VERTICES:
        raise EnvelopeExceeded(f"blow-up limited to {BLOWUP_MAX_VERTICES} vertices")
    h, _ = blow_up(g, z)
    left = tree_count(h)
    right = enumerator_value(g, z) * prod(
        sum(z[u] for u in g.neighbors(v)) ** (z[v] - 1) for v in g.vertices)
    return left, _plain(right)


def blowup_identity_check(g: Graph, z: Mapping[int, int]) -> bool:
    left, right = blowup_identity(g, z)
    return left == right


# -- random sampling ----------------------------------------------------------

def random_connected_bipartite(rng: random.Random, n: int, density: float,
                               max_tries: int = 10_000) -> tuple[Graph, BipartitionCert]:
    """Random part sizes, independent cross edges, rejection of disconnected draws."""
    if n < 2:
        raise ValueError("need at least two vertices")
    for _ in range(max_tries):
        a = rng.randint(1, n - 1)
        edges = [(u, v) for u in range(a) for v in range(a, n) if rng.random() < density]
        g = Graph.from_edges(range(n), edges)
        if g.is_connected():
            return g, BipartitionCert(frozenset(range(a)), frozenset(range(a, n)))
    raise RuntimeError(f"no connected bipartite sample after {max_tries} tries (density {density})")


def random_point(rng: random.Random, vertices: Iterable[int], zero_prob: float = 0.1,
                 max_num: int = 20, max_den: int = 10) -> dict[int, Fraction]:
    return {v: (Fraction(0) if rng.random() < zero_prob
                else Fraction(rng.randint(1, max_num), rng.randint(1, max_den)))
            for v in vertices}


def _sort_key(r: EhrenborgReport):
    return (-(r.ratio if r.ratio is not None else Fraction(-1)), r.graph, r.kind, str(r.lhs))


def search_counterexample(n_range: tuple[int, int] = (2, 8), edge_density: float = 0.5,
                          trials: int = 100, seed: int = 0, points: int = 1,
                          top: int | None = None) -> list[EhrenborgReport]:
    """Sample bipartite graphs and points; reports sorted by ratio, tightest first.

    Each trial contributes one numeric report and ``points`` polynomial ones.
    Violations are logged at error level.
    """
    rng = random.Random(seed)
    lo, hi = n_range
    reports = []
    for _ in range(trials):
        g, cert = random_connected_bipartite(rng, rng.randint(max(lo, 2), hi), edge_density)
        reports.append(check_numeric(g, cert))
        for _ in range(points):
            reports.append(check_polynomial(g, cert, random_point(rng, g.vertices)))
    for r in reports:
        if not r.holds:
            log.error("Ehrenborg counterexample: graph %s lhs=%s rhs=%s", r.graph, r.lhs, r.rhs)
    reports.sort(key=_sort_key)
    return reports if top is None else reports[:top]


def partitions_fitting(max_vertices: int) -> list[tuple[int, ...]]:
    """All Ferrers diagrams whose graph has at most ``max_vertices`` vertices."""
    out = []

    def grow(parts: list[int]) -> None:
        out.append(tuple(parts))
        if len(parts) + 1 + parts[0] <= max_vertices:
            for p in range(1, parts[-1] + 1):
                grow(parts + [p])

    for first in range(1, max_vertices):
        grow([first])
    return out


def ferrers_sweep(max_vertices: int = 9, points: int = 0, seed: int = 0) -> list[EhrenborgReport]:
    """Ehrenborg reports for every Ferrers-Young graph up to ``max_vertices``."""
    rng = random.Random(seed)
    reports = []
    for lam in partitions_fitting(max_vertices):
        g, cert = ferrers_young(lam)
        reports.append(check_numeric(g, cert))
        for _ in range(points):
            reports.append(check_polynomial(g, cert, random_point(rng, g.vertices, zero_prob=0)))
    return reports
