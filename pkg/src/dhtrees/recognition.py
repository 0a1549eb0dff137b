"""Recognizers for distance-hereditary graphs, cographs and threshold graphs.

Three independent tests of distance-heredity are provided: elimination of
pendants and twins (returning a replayable construction), a search for
forbidden induced subgraphs, and the four-point distance condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Literal

from .errors import EnvelopeExceeded
from .families import domino, gem, house, path
from .graph import Graph, add_pendant, duplicate

StepKind = Literal["seed", "pendant", "ftwin", "ttwin"]

FORBIDDEN_MAX_VERTICES = 12


@dataclass(frozen=True)
class ConstructionStep:
    kind: StepKind
    new_vertex: int
    ref: int | None = None  # attach point for pendants, original for twins

    def to_text(self) -> str:
        if self.kind == "seed":
            return f"seed {self.new_vertex}"
        return f"{self.kind} {self.new_vertex} {self.ref}"

    @classmethod
    def parse(cls, line: str) -> ConstructionStep:
        toks = line.split()
        if toks[0] == "seed" and len(toks) == 2:
            return cls("seed", int(toks[1]))
        if toks[0] in ("pendant", "ftwin", "ttwin") and len(toks) == 3:
            return cls(toks[0], int(toks[1]), int(toks[2]))
        raise ValueError(f"bad construction step {line!r}")


@dataclass(frozen=True)
class ConstructionSequence:
    """Pendant/twin steps building a graph from a single vertex."""

    steps: tuple[ConstructionStep, ...]

    def __bool__(self) -> bool:
        return True

    def replay(self) -> Graph:
        if not self.steps or self.steps[0].kind != "seed":
            raise ValueError("construction must start with a seed step")
        g = Graph({self.steps[0].new_vertex: ()})
        for step in self.steps[1:]:
            if step.kind == "pendant":
                g, _ = add_pendant(g, step.ref, step.new_vertex)
            elif step.kind == "ftwin":
                g, _ = duplicate(g, step.ref, False, step.new_vertex)
            elif step.kind == "ttwin":
                g, _ = duplicate(g, step.ref, True, step.new_vertex)
            else:
                raise ValueError(f"unexpected step {step}")
        return g

    def to_text(self) -> str:
        return "\n".join(s.to_text() for s in self.steps) + "\n"

    @classmethod
    def parse(cls, text: str) -> ConstructionSequence:
        return cls(tuple(ConstructionStep.parse(ln) for ln in text.splitlines() if ln.strip()))


@dataclass(frozen=True)
class NotDH:
    """Elimination got stuck: ``reduced`` has no pendant vertex and no twins."""

    reduced: Graph

    def __bool__(self) -> bool:
        return False


def _find_twins(g: Graph, closed: bool) -> tuple[int, int] | None:
    groups: dict[frozenset[int], int] = {}
    best = None
    for v in g.vertices:
        key = g.neighbors(v) | {v} if closed else g.neighbors(v)
        if key in groups:
            pair = (groups[key], v)
            if best is None or pair < best:
                best = pair
        else:
            groups[key] = v
    return best


def recognize_dh(g: Graph) -> ConstructionSequence | NotDH:
    """Strip pendants, then false twins, then true twins (lowest ids first).

    Success yields the reversed elimination as a construction from one vertex.
    """
    if not g.is_connected():
        raise ValueError("distance-heredity is defined for connected graphs")
    steps: list[ConstructionStep] = []
    cur = g
    while cur.n > 1:
        pend = next((v for v in cur.vertices if cur.degree(v) == 1), None)
        if pend is not None:
            (attach,) = cur.neighbors(pend)
            steps.append(ConstructionStep("pendant", pend, attach))
            cur = cur.remove_vertex(pend)
            continue
        pair = _find_twins(cur, closed=False)
        kind = "ftwin"
        if pair is None:
            pair = _find_twins(cur, closed=True)
            kind = "ttwin"
        if pair is None:
            return NotDH(cur)
        keep, drop = pair
        steps.append(ConstructionStep(kind, drop, keep))
        cur = cur.remove_vertex(drop)
    steps.append(ConstructionStep("seed", cur.vertices[0]))
    return ConstructionSequence(tuple(reversed(steps)))


# -- forbidden induced subgraphs ---------------------------------------------

ForbiddenKind = Literal["LongCycle", "Gem", "House", "Domino"]


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: ForbiddenKind
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind.lower()}({' '.join(map(str, self.vertices))})"


def _edge_set(g: Graph, order) -> set[frozenset[int]]:
    pos = {v: i for i, v in enumerate(order)}
    return {frozenset((pos[u], pos[v])) for u, v in g.induced(order).edges()}


def _pattern_edges(p: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in p.edges()}


_PATTERNS: dict[str, Graph] = {"Gem": gem(), "House": house(), "Domino": domino()}


def _match_pattern(g: Graph, subset, pattern: Graph) -> tuple[int, ...] | None:
    """Order ``subset`` so that vertex i plays pattern vertex i, if possible."""
    sub = g.induced(subset)
    if sub.m != pattern.m or sub.degree_sequence() != pattern.degree_sequence():
        return None
    target = _pattern_edges(pattern)
    pdeg = [pattern.degree(i) for i in range(pattern.n)]
    for order in permutations(sorted(subset)):
        if any(sub.degree(v) != pdeg[i] for i, v in enumerate(order)):
            continue
        if _edge_set(g, order) == target:
            return order
    return None


def is_induced_cycle(g: Graph, order) -> bool:
    k = len(order)
    want = {frozenset((i, (i + 1) % k)) for i in range(k)}
    return len(set(order)) == k and _edge_set(g, order) == want


def _long_induced_cycle(g: Graph) -> tuple[int, ...] | None:
    """Induced cycle of length >= 5 whose smallest vertex starts the path."""
    for s in g.vertices:
        stack = [(s, [s])]
        while stack:
            v, walk = stack.pop()
            for u in sorted(g.neighbors(v), reverse=True):
                if u <= s or u in walk:
                    continue
                # u may touch only v among the interior, and s only to close
                inner = walk[1:-1]
                if any(g.has_edge(u, w) for w in inner):
                    continue
                closes = len(walk) > 1 and g.has_edge(u, s)
                if closes:
                    if len(walk) + 1 >= 5:
                        return tuple(walk + [u])
                    continue
                stack.append((u, walk + [u]))
    return None


def verify_witness(g: Graph, w: ForbiddenWitness) -> bool:
    if w.kind == "LongCycle":
        return len(w.vertices) >= 5 and is_induced_cycle(g, w.vertices)
    return _edge_set(g, w.vertices) == _pattern_edges(_PATTERNS[w.kind])


def find_forbidden(g: Graph, max_vertices: int = FORBIDDEN_MAX_VERTICES) -> ForbiddenWitness | None:
    """Exhaustive search for an induced long cycle, gem, house or domino."""
    if g.n > max_vertices:
        raise EnvelopeExceeded(f"forbidden-subgraph search limited to {max_vertices} vertices")
    found = None
    cyc = _long_induced_cycle(g)
    if cyc is not None:
        found = ForbiddenWitness("LongCycle", cyc)
    else:
        for kind, size in (("Gem", 5), ("House", 5), ("Domino", 6)):
            for subset in combinations(g.vertices, size):
                order = _match_pattern(g, subset, _PATTERNS[kind])
                if order is not None:
                    found = ForbiddenWitness(kind, order)
                    break
            if found:
                break
    if found is not None and not verify_witness(g, found):
        raise AssertionError(f"witness {found} does not induce its pattern")
    return found


# -- four-point condition ----------------------------------------------------

def four_point_check(g: Graph) -> bool:
    """Every 4-set has two equal sums among the three pairings of distances."""
    if not g.is_connected():
        raise ValueError("four-point condition needs a connected graph")
    d = {v: g.distances_from(v) for v in g.vertices}
    for u, v, w, x in combinations(g.vertices, 4):
        a = d[u][v] + d[w][x]
        b = d[u][w] + d[v][x]
        c = d[u][x] + d[v][w]
        if a != b and b != c and a != c:
            return False
    return True


# -- cographs and threshold graphs ---------------------------------------------

@dataclass(frozen=True)
class CoTree:
    kind: Literal["leaf", "union", "join"]
    vertex: int | None = None
    children: tuple[CoTree, ...] = field(default=())

    def __bool__(self) -> bool:
        return True

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def to_graph(self) -> Graph:
        if self.kind == "leaf":
            return Graph({self.vertex: ()})
        parts = [c.to_graph() for c in self.children]
        adj: dict[int, set[int]] = {}
        for p in parts:
            for v in p.vertices:
                adj[v] = set(p.neighbors(v))
        if self.kind == "join":
            for i, p in enumerate(parts):
                others = {v for j, q in enumerate(parts) if j != i for v in q.vertices}
                for v in p.vertices:
                    adj[v] |= others
        return Graph(adj)

    def __str__(self) -> str:
        if self.kind == "leaf":
            return str(self.vertex)
        return f"{self.kind}({', '.join(map(str, self.children))})"


@dataclass(frozen=True)
class NotCograph:
    witness: tuple[int, int, int, int]  # induced path in order

    def __bool__(self) -> bool:
        return False


_P4 = _pattern_edges(path(4))


def _find_p4(g: Graph) -> tuple[int, int, int, int] | None:
    for subset in combinations(g.vertices, 4):
        sub = g.induced(subset)
        if sub.m != 3 or sub.degree_sequence() != [2, 2, 1, 1]:
            continue
        for order in permutations(subset):
            if order[0] < order[3] and _edge_set(g, order) == _P4:
                return order
    return None


def is_cograph(g: Graph) -> CoTree | NotCograph:
    """Cotree by splitting into components or co-components, else a P4."""

    def build(h: Graph) -> CoTree | NotCograph:
        if h.n == 1:
            return CoTree("leaf", h.vertices[0])
        comps = h.components()
        kind = "union"
        if len(comps) == 1:
            comps = h.complement().components()
            kind = "join"
        if len(comps) == 1:
            p4 = _find_p4(h)
            if p4 is None:
                raise AssertionError("prime graph without an induced P4")
            return NotCograph(p4)
        kids = []
        for comp in comps:
            sub = build(h.induced(comp))
            if not sub:
                return sub
            kids.append(sub)
        return CoTree(kind, children=tuple(kids))

    if g.n == 0:
        raise ValueError("empty graph")
    return build(g)


def is_threshold(g: Graph) -> bool:
    """Peel isolated or dominating vertices until nothing is left."""
    cur = g
    while cur.n:
        for v in cur.vertices:
            if cur.degree(v) in (0, cur.n - 1):
                cur = cur.remove_vertex(v)
                break
        else:
            return False
    return True
