"""Immutable labeled simple graphs and the surgery operations on them.

Vertex ids are non-negative integers.  Every graph remembers ``next_id``, the
smallest id that has never been handed out in its derivation history, so that
ids freed by deletion are not recycled by later surgery.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownVertex


class Graph:
    """Simple undirected graph with stable integer vertex ids."""

    __slots__ = ("_adj", "_next_id", "_hash")

    def __init__(self, adj: Mapping[int, Iterable[int]], next_id: int | None = None):
        table = {int(v): frozenset(int(u) for u in nbrs) for v, nbrs in adj.items()}
        for v, nbrs in table.items():
            if v < 0:
                raise ValueError(f"vertex ids must be non-negative, got {v}")
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in table or v not in table[u]:
                    raise ValueError(f"adjacency is not symmetric at edge {v}-{u}")
        floor = max(table) + 1 if table else 0
        self._adj = dict(sorted(table.items()))
        self._next_id = floor if next_id is None else max(next_id, floor)
        self._hash = None

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]],
                   next_id: int | None = None) -> Graph:
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise UnknownVertex(u if u not in adj else v)
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj, next_id)

    # -- basic queries -------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def next_id(self) -> int:
        return self._next_id

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in self._adj.items() for v in sorted(nb) if u < v]

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def degree_sequence(self) -> list[int]:
        return sorted((len(nb) for nb in self._adj.values()), reverse=True)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self._adj:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in self._adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        queue.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    # -- derived graphs ------------------------------------------------------

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = set(keep)
        for v in keep:
            if v not in self._adj:
                raise UnknownVertex(v)
        return Graph({v: self._adj[v] & keep for v in keep}, self._next_id)

    def remove_vertex(self, v: int) -> Graph:
        if v not in self._adj:
            raise UnknownVertex(v)
        return self.induced(u for u in self._adj if u != v)

    def complement(self) -> Graph:
        vs = set(self._adj)
        return Graph({v: vs - self._adj[v] - {v} for v in vs}, self._next_id)

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        """Rename vertices; ids absent from ``mapping`` keep their label."""
        new = {v: mapping.get(v, v) for v in self._adj}
        if len(set(new.values())) != len(new):
            raise ValueError("relabeling is not injective")
        return Graph({new[v]: {new[u] for u in nb} for v, nb in self._adj.items()})

    def with_vertex(self, neighbors: Iterable[int], new: int | None = None) -> tuple[Graph, int]:
        """Add one vertex joined to ``neighbors``; returns the graph and its id."""
        neighbors = set(neighbors)
        for u in neighbors:
            if u not in self._adj:
                raise UnknownVertex(u)
        if new is None:
            new = self._next_id
        elif new in self._adj:
            raise ValueError(f"vertex {new} already present")
        adj = {v: (nb | {new}) if v in neighbors else nb for v, nb in self._adj.items()}
        adj[new] = frozenset(neighbors)
        return Graph(adj, max(self._next_id, new + 1)), new

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple((v, tuple(sorted(nb))) for v, nb in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class BipartitionCert:
    part1: frozenset[int]
    part2: frozenset[int]

    def validate(self, g: Graph) -> None:
        if self.part1 & self.part2:
            raise ValueError("bipartition parts overlap")
        if self.part1 | self.part2 != set(g.vertices):
            raise ValueError("bipartition does not cover the vertex set")
        for u, v in g.edges():
            if (u in self.part1) == (v in self.part1):
                raise ValueError(f"edge {u}-{v} lies inside one part")


def bipartition(g: Graph) -> BipartitionCert | None:
    """Two-colour a graph by BFS; None if it has an odd cycle."""
    side: dict[int, int] = {}
    for comp in g.components():
        side[comp[0]] = 0
        queue = deque([comp[0]])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return BipartitionCert(frozenset(v for v, s in side.items() if s == 0),
                           frozenset(v for v, s in side.items() if s == 1))


# -- surgery ------------------------------------------------------------------

def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def add_pendant(g: Graph, attach: int, new: int | None = None) -> tuple[Graph, int]:
    """Attach a new degree-one vertex to ``attach``."""
    return g.with_vertex([attach], new)


def duplicate(g: Graph, v: int, with_edge: bool, new: int | None = None) -> tuple[Graph, int]:
    """Add a twin of ``v``: a false twin, or a true twin when ``with_edge``."""
    nbrs = set(g.neighbors(v))
    if with_edge:
        nbrs.add(v)
    return g.with_vertex(nbrs, new)


def cone(g: Graph, apex: int | None = None) -> tuple[Graph, int]:
    """The extension of ``g``: a new apex adjacent to every vertex."""
    return g.with_vertex(g.vertices, apex)


def compose_graphs(g1: Graph, v1: int, g2: Graph, v2: int) -> tuple[Graph, dict[int, int]]:
    """Glue ``g1`` and ``g2`` along their marked vertices.

    Both marked vertices are deleted and their former neighbourhoods are
    joined completely.  The vertices of ``g2`` are shifted by ``g1.next_id``;
    the returned map sends each surviving ``g2`` id to its new id.
    """
    n1 = g1.neighbors(v1)
    n2 = g2.neighbors(v2)
    offset = g1.next_id
    shift = {u: u + offset for u in g2.vertices if u != v2}
    side2 = {shift[u] for u in n2}
    adj: dict[int, set[int]] = {}
    for u in g1.vertices:
        if u != v1:
            adj[u] = set(g1.neighbors(u)) - {v1}
            if u in n1:
                adj[u] |= side2
    for u in g2.vertices:
        if u != v2:
            nb = {shift[w] for w in g2.neighbors(u) if w != v2}
            if u in n2:
                nb |= set(n1)
            adj[shift[u]] = nb
    return Graph(adj, offset + g2.next_id), shift


def blow_up(g: Graph, z: Mapping[int, int]) -> tuple[Graph, dict[int, int]]:
    """Replace each vertex v by ``z[v]`` pairwise non-adjacent copies.

    The original vertex keeps its id as the first copy; the rest are fresh.
    Returns the graph and a map from every new vertex to its original.
    """
    for v in g.vertices:
        if v not in z:
            raise ValueError(f"no multiplicity given for vertex {v}")
        if z[v] < 1:
            raise ValueError(f"multiplicity of vertex {v} must be positive, got {z[v]}")
    origin = {v: v for v in g.vertices}
    nxt = g.next_id
    copies = {v: [v] for v in g.vertices}
    for v in g.vertices:
        for _ in range(z[v] - 1):
            copies[v].append(nxt)
            origin[nxt] = v
            nxt += 1
    adj = {w: {c for u in g.neighbors(origin[w]) for c in copies[u]} for w in origin}
    return Graph(adj, nxt), origin


# -- serialization ------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Read the canonical ``n m`` / ``u v`` edge-list format."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty graph description")
    try:
        header = [int(t) for t in rows[0]]
        body = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise ValueError(f"non-integer token in graph description: {exc}") from None
    if len(header) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = header
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for r in body:
        if len(r) != 2:
            raise ValueError(f"edge line must have two vertices: {r}")
        u, v = r
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u} {v} out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        edges.append((u, v))
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ValueError("parallel edges are not allowed")
    return Graph.from_edges(range(n), edges)


def format_graph(g: Graph) -> str:
    """Write the canonical format; vertices are renumbered by sorted id."""
    index = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    lines += [f"{index[u]} {index[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    return json.dumps({"vertices": list(g.vertices), "edges": [list(e) for e in g.edges()]})


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph.from_edges(data["vertices"], [tuple(e) for e in data["edges"]])


def graph_hash(g: Graph) -> str:
    """Short stable digest of the labeled graph (not isomorphism-invariant)."""
    return hashlib.sha256(graph_to_json(g).encode()).hexdigest()[:12]
