"""Vertex spanning enumerators in factored form.

An :class:`Enumerator` is ``constant * prod(form ** mult) * prod(nonlinear)``
where the forms are canonical :class:`LinearForm` objects and the nonlinear
factors are expanded :class:`SparsePoly` objects.  The enumerator of a graph
``G`` is the sum over spanning trees ``T`` of ``prod_v x_v ** (deg_T(v) - 1)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NotDistanceHereditaryError
from .families import inversion_graph, is_separable
from .graph import Graph, compose_graphs, cone
from .linalg import brute_force_enumerator
from .poly import LinearForm, SparsePoly
from .recognition import ConstructionSequence, recognize_dh


class Enumerator:
    __slots__ = ("constant", "factors", "nonlinear")

    def __init__(self, constant: int = 1,
                 factors: Iterable[tuple[LinearForm, int]] = (),
                 nonlinear: Iterable[SparsePoly] = ()):
        const = int(constant)
        merged: dict[LinearForm, int] = {}
        polys: list[SparsePoly] = []
        for form, mult in factors:
            if mult < 1:
                raise ValueError("factor multiplicities must be positive")
            k, f = form.canonical()
            const *= k ** mult
            if k == 0:
                break
            merged[f] = merged.get(f, 0) + mult
        for p in nonlinear:
            if p.is_zero():
                const = 0
            elif p.degrees() == {0}:
                const *= p.terms[()]
            else:
                polys.append(p)
        if const == 0:
            merged, polys = {}, []
        self.constant = const
        self.factors: tuple[tuple[LinearForm, int], ...] = tuple(merged.items())
        self.nonlinear: tuple[SparsePoly, ...] = tuple(polys)

    @classmethod
    def one(cls) -> Enumerator:
        return cls(1)

    @classmethod
    def linear(cls, form: LinearForm, mult: int = 1) -> Enumerator:
        return cls(1, [(form, mult)])

    @classmethod
    def from_poly(cls, p: SparsePoly) -> Enumerator:
        return cls(1, (), [p])

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.constant == 0

    def is_linear_product(self) -> bool:
        """True when no nonlinear factor of degree above one remains."""
        return all(p.total_degree() <= 1 for p in self.nonlinear)

    @property
    def remainder(self) -> SparsePoly:
        out = SparsePoly.constant(1)
        for p in self.nonlinear:
            out = out * p
        return out

    def factor_multiset(self) -> Counter:
        return Counter(dict(self.factors))

    def variables(self) -> set[int]:
        vs = {v for f, _ in self.factors for v in f.coeffs}
        for p in self.nonlinear:
            vs |= p.variables()
        return vs

    def degree(self) -> int:
        return sum(m for _, m in self.factors) + sum(p.total_degree() for p in self.nonlinear)

    def same_factorization(self, other: Enumerator) -> bool:
        return (self.constant == other.constant
                and self.factor_multiset() == other.factor_multiset()
                and self.remainder == other.remainder)

    # -- algebra -------------------------------------------------------------

    def __mul__(self, other: Enumerator) -> Enumerator:
        return Enumerator(self.constant * other.constant,
                          self.factors + other.factors,
                          self.nonlinear + other.nonlinear)

    def substitute(self, v: int, f: LinearForm) -> Enumerator:
        """Replace ``x_v`` by the linear form ``f`` everywhere."""
        if f.is_zero():
            raise ValueError("substituted form must be nonzero")
        fp = f.to_poly()
        forms = []
        for form, mult in self.factors:
            new = form.substitute(v, f)
            if new.is_zero():
                return Enumerator(0)
            forms.append((new, mult))
        polys = [p.substitute(v, fp) if v in p.variables() else p for p in self.nonlinear]
        return Enumerator(self.constant, forms, polys)

    def relabel(self, mapping: Mapping[int, int]) -> Enumerator:
        return Enumerator(self.constant,
                          [(f.relabel(mapping), m) for f, m in self.factors],
                          [p.relabel(mapping) for p in self.nonlinear])

    def expand(self) -> SparsePoly:
        out = SparsePoly.constant(self.constant)
        for form, mult in self.factors:
            out = out * form.to_poly() ** mult
        for p in self.nonlinear:
            out = out * p
        return out

    def evaluate(self, point: Mapping[int, Fraction | int]) -> Fraction | int:
        val = self.constant
        if val == 0:
            return 0
        for form, mult in self.factors:
            val *= form.evaluate(point) ** mult
        for p in self.nonlinear:
            val *= p.evaluate(point)
        return val

    # -- text ----------------------------------------------------------------

    def serialize(self) -> str:
        lines = [str(self.constant)]
        lines += [f"{m} : {f.serialize()}" for f, m in self.factors]
        for p in self.nonlinear:
            lines.append("--")
            lines += p.format_terms()
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Enumerator:
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty enumerator text")
        constant = int(lines[0])
        factors = []
        polys: list[dict] = []
        for ln in lines[1:]:
            if ln.strip() == "--":
                polys.append({})
                continue
            head, sep, body = ln.partition(" :")
            if not sep:
                raise ValueError(f"malformed enumerator line {ln!r}")
            if not polys:
                factors.append((LinearForm.parse(body), int(head)))
                continue
            powers = {}
            for tok in body.split():
                var, _, e = tok.partition("^")
                powers[int(var[1:])] = int(e)
            mono = tuple(sorted(powers.items()))
            polys[-1][mono] = polys[-1].get(mono, 0) + int(head)
        return cls(constant, factors, [SparsePoly(t) for t in polys])

    def pretty(self) -> str:
        if self.constant == 0:
            return "0"
        parts = [] if self.constant == 1 and (self.factors or self.nonlinear) else [str(self.constant)]
        for f, m in self.factors:
            parts.append(f"({f})" + (f"^{m}" if m > 1 else ""))
        parts += [f"[{p}]" for p in self.nonlinear]
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Enumerator) and self.same_factorization(other)

    def __repr__(self) -> str:
        return f"Enumerator({self.pretty()})"


def _sum_form(vertices: Iterable[int]) -> LinearForm:
    return LinearForm.sum_of(vertices)


# -- composition -------------------------------------------------------------

def compose_enumerators(e1: Enumerator, v1: int, n2: Iterable[int],
                        e2: Enumerator, v2: int, n1: Iterable[int]) -> Enumerator:
    """Enumerator of the glued graph from the enumerators of its two halves.

    All arguments must already live in the id space of the glued graph:
    ``n2`` is the (relabelled) neighbourhood of ``v2`` and ``n1`` that of ``v1``.
    ``x_{v1}`` becomes the sum over ``n2`` and ``x_{v2}`` the sum over ``n1``.
    """
    return e1.substitute(v1, _sum_form(n2)) * e2.substitute(v2, _sum_form(n1))


def compose(g1: Graph, v1: int, e1: Enumerator,
            g2: Graph, v2: int, e2: Enumerator) -> tuple[Graph, Enumerator, dict[int, int]]:
    """Glue two graphs and their enumerators; returns graph, enumerator, g2 relabelling."""
    h, shift = compose_graphs(g1, v1, g2, v2)
    # v2 is deleted from h; park its variable on an id no vertex of h uses
    tmp = h.next_id
    mapping = dict(shift)
    mapping[v2] = tmp
    e2h = e2.relabel(mapping)
    n2 = [shift[u] for u in g2.neighbors(v2)]
    return h, compose_enumerators(e1, v1, n2, e2h, tmp, g1.neighbors(v1)), shift


# -- distance-hereditary factorization ---------------------------------------

def enumerator_from_construction(seq: ConstructionSequence) -> Enumerator:
    """Replay a pendant/twin construction, updating the enumerator step by step."""
    steps = seq.steps
    if not steps or steps[0].kind != "seed":
        raise ValueError("construction must start with a seed step")
    if len(steps) == 1:
        raise ValueError("the one-vertex graph has no polynomial enumerator")
    # any second step yields K2, whose enumerator is 1; a false twin would disconnect
    if steps[1].kind == "ftwin":
        raise ValueError("construction is disconnected after its second step")
    adj: dict[int, set[int]] = {steps[0].new_vertex: {steps[1].new_vertex},
                                steps[1].new_vertex: {steps[0].new_vertex}}
    e = Enumerator.one()
    for step in steps[2:]:
        new, ref = step.new_vertex, step.ref
        if step.kind == "pendant":
            e = e * Enumerator.linear(LinearForm({ref: 1}))
            adj[new] = {ref}
            adj[ref].add(new)
            continue
        nbrs = set(adj[ref])
        split = LinearForm({ref: 1, new: 1})
        e = e.substitute(ref, split)
        if step.kind == "ftwin":
            e = e * Enumerator.linear(_sum_form(nbrs))
        else:
            e = e * Enumerator.linear(LinearForm(Counter(nbrs) + Counter([ref, new])))
        adj[new] = set(nbrs)
        for u in nbrs:
            adj[u].add(new)
        if step.kind == "ttwin":
            adj[new].add(ref)
            adj[ref].add(new)
    return e


def factor_enumerator(g: Graph) -> Enumerator:
    """Product of linear forms equal to the enumerator of a distance-hereditary graph."""
    seq = recognize_dh(g)
    if not seq:
        raise NotDistanceHereditaryError("graph is not distance-hereditary")
    return enumerator_from_construction(seq)


def graph_enumerator(g: Graph) -> Enumerator:
    """Factored form when distance-hereditary, otherwise the brute-force expansion."""
    if g.n >= 2 and recognize_dh(g):
        return factor_enumerator(g)
    return Enumerator.from_poly(brute_force_enumerator(g))


# -- closed forms ---------------------------------------------------------------

def _cycle_kernel(n: int, forms: Sequence[SparsePoly]) -> SparsePoly:
    """sum_i prod_{j not in {i, i+1}} forms[j] with cyclic indices."""
    out = SparsePoly()
    for i in range(n):
        term = SparsePoly.constant(1)
        for j in range(n):
            if j != i and j != (i + 1) % n:
                term = term * forms[j]
        out = out + term
    return out


def cycle_enumerator(n: int) -> Enumerator:
    """Enumerator of ``cycle(n)`` (ids 0..n-1), kept as an expanded remainder."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Enumerator.from_poly(_cycle_kernel(n, [SparsePoly.var(i) for i in range(n)]))


def superprism_enumerator(n: int) -> Enumerator:
    """Enumerator of ``superprism(n)``: cycle kernel in the pair sums times
    ``prod_i (s_i + s_{i+2})`` where ``s_i = x_{2i} + x_{2i+1}``."""
    if n < 4:
        raise ValueError("superprism needs n >= 4")
    pair = [LinearForm({2 * i: 1, 2 * i + 1: 1}) for i in range(n)]
    forms = [(LinearForm({2 * i: 1, 2 * i + 1: 1, 2 * j: 1, 2 * j + 1: 1}), 1)
             for i in range(n) for j in [(i + 2) % n]]
    kernel = _cycle_kernel(n, [p.to_poly() for p in pair])
    return Enumerator(1, forms, [kernel])


def extension_enumerator(g: Graph, apex: int | None = None) -> Enumerator:
    """Enumerator of the cone over ``g`` (rooted spanning forests of ``g``).

    Factored into linear forms when the cone is distance-hereditary; otherwise
    the brute-force expansion is returned as a single nonlinear factor.
    """
    h, _ = cone(g, apex)
    return graph_enumerator(h)


def gao_liu_enumerator(w: Sequence[int]) -> Enumerator:
    """Closed-form rooted-forest enumerator of the inversion graph of a
    separable permutation; the apex variable is ``x_0``."""
    w = tuple(w)
    if not is_separable(w):
        raise ValueError(f"permutation {w} is not separable")
    n = len(w)
    forms = []
    for i in range(1, n):
        coeffs = Counter({0: 1})
        coeffs.update(j for j in range(1, i + 1) if w[j - 1] > w[i])
        coeffs.update(j for j in range(i + 1, n + 1) if w[j - 1] < w[i - 1])
        forms.append((LinearForm(coeffs), 1))
    return Enumerator(1, forms)


def gao_liu_reference(w: Sequence[int]) -> Enumerator:
    """The same enumerator computed through the generic DH pipeline."""
    return extension_enumerator(inversion_graph(w), apex=0)


def extension_identity_check(g: Graph) -> bool:
    """``P_G * sum(x) == P_cone(g)`` with the apex variable set to zero."""
    if not g.is_connected() or g.n < 2:
        raise ValueError("extension identity needs a connected graph on >= 2 vertices")
    h, apex = cone(g)
    lhs = graph_enumerator(g).expand() * _sum_form(g.vertices).to_poly()
    rhs = graph_enumerator(h).expand().restrict_zero(apex)
    return lhs == rhs

