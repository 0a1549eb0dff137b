"""Exact polynomials over integer-labelled variables.

A monomial is a tuple of ``(var, exponent)`` pairs sorted by var with all
exponents positive; the empty tuple is the constant monomial.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping

from .errors import EnvelopeExceeded

Monomial = tuple[tuple[int, int], ...]

EXPANSION_MAX_TERMS = 10**6


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _var_name(v: int) -> str:
    return f"x{v}"


def _parse_var(tok: str) -> int:
    if not tok.startswith("x"):
        raise ValueError(f"bad variable token {tok!r}")
    return int(tok[1:])


class SparsePoly:
    """Sparse multivariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> SparsePoly:
        return cls({(): c})

    @classmethod
    def var(cls, v: int) -> SparsePoly:
        return cls({((v, 1),): 1})

    @classmethod
    def from_exponents(cls, exps: Iterable[tuple[Mapping[int, int], int]]) -> SparsePoly:
        acc: Counter = Counter()
        for powers, c in exps:
            acc[tuple(sorted((v, e) for v, e in powers.items() if e))] += c
        return cls(acc)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def degrees(self) -> set[int]:
        return {sum(e for _, e in m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def total_degree(self) -> int:
        return max(self.degrees(), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: SparsePoly) -> SparsePoly:
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return SparsePoly(acc)

    def __neg__(self) -> SparsePoly:
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def scale(self, k: int) -> SparsePoly:
        return SparsePoly({m: k * c for m, c in self.terms.items()})

    def __mul__(self, other: SparsePoly) -> SparsePoly:
        if isinstance(other, int):
            return self.scale(other)
        acc: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                acc[m] = acc.get(m, 0) + ca * cb
        if len(acc) > EXPANSION_MAX_TERMS:
            raise EnvelopeExceeded(f"expansion exceeds {EXPANSION_MAX_TERMS} terms")
        return SparsePoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        result = SparsePoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def evaluate(self, point: Mapping[int, Fraction | int]) -> Fraction | int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                try:
                    t *= point[v] ** e
                except KeyError:
                    raise KeyError(f"no value for variable x{v}") from None
            total += t
        return total

    def substitute(self, v: int, replacement: SparsePoly) -> SparsePoly:
        """Replace variable ``v`` by a polynomial."""
        powers: dict[int, SparsePoly] = {}
        acc = SparsePoly()
        rest: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            e = dict(m).get(v, 0)
            if not e:
                rest[m] = rest.get(m, 0) + c
                continue
            if e not in powers:
                powers[e] = replacement ** e
            others = tuple(p for p in m if p[0] != v)
            acc = acc + SparsePoly({others: c}) * powers[e]
        return acc + SparsePoly(rest)

    def relabel(self, mapping: Mapping[int, int]) -> SparsePoly:
        acc: Counter = Counter()
        for m, c in self.terms.items():
            acc[tuple(sorted((mapping.get(v, v), e) for v, e in m))] += c
        return SparsePoly(acc)

    def restrict_zero(self, v: int) -> SparsePoly:
        """Set variable ``v`` to zero."""
        return SparsePoly({m: c for m, c in self.terms.items() if all(u != v for u, _ in m)})

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def format_terms(self) -> list[str]:
        out = []
        for m, c in self.sorted_terms():
            mono = " ".join(f"{_var_name(v)}^{e}" for v, e in m)
            out.append(f"{c} : {mono}".rstrip())
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(_var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


class LinearForm:
    """Homogeneous linear form ``sum c_v x_v`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        self.coeffs: dict[int, int] = {v: c for v, c in sorted(coeffs.items()) if c}

    @classmethod
    def sum_of(cls, variables: Iterable[int]) -> LinearForm:
        return cls(Counter(variables))

    def is_zero(self) -> bool:
        return not self.coeffs

    def canonical(self) -> tuple[int, LinearForm]:
        """Split off the content: returns ``(k, f)`` with ``self == k*f``,
        ``f`` primitive and its lowest-id coefficient positive."""
        if not self.coeffs:
            return 0, self
        k = reduce(gcd, self.coeffs.values())
        if next(iter(self.coeffs.values())) < 0:
            k = -k
        return k, LinearForm({v: c // k for v, c in self.coeffs.items()})

    def substitute(self, v: int, f: LinearForm) -> LinearForm:
        c = self.coeffs.get(v)
        if not c:
            return self
        acc = Counter(self.coeffs)
        del acc[v]
        for u, d in f.coeffs.items():
            acc[u] += c * d
        return LinearForm(acc)

    def relabel(self, mapping: Mapping[int, int]) -> LinearForm:
        acc: Counter = Counter()
        for v, c in self.coeffs.items():
            acc[mapping.get(v, v)] += c
        return LinearForm(acc)

    def evaluate(self, point: Mapping[int, Fraction | int]) -> Fraction | int:
        try:
            return sum(c * point[v] for v, c in self.coeffs.items())
        except KeyError as exc:
            raise KeyError(f"no value for variable x{exc.args[0]}") from None

    def to_poly(self) -> SparsePoly:
        return SparsePoly({((v, 1),): c for v, c in self.coeffs.items()})

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.key())

    def serialize(self) -> str:
        return " + ".join(f"{c}*{_var_name(v)}" for v, c in self.coeffs.items())

    @classmethod
    def parse(cls, text: str) -> LinearForm:
        coeffs: dict[int, int] = {}
        for tok in text.split("+"):
            c, _, v = tok.strip().partition("*")
            var = _parse_var(v.strip())
            if var in coeffs:
                raise ValueError(f"variable x{var} repeated in linear form")
            coeffs[var] = int(c)
        return cls(coeffs)

    def __str__(self) -> str:
        parts = []
        for v, c in self.coeffs.items():
            name = _var_name(v)
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LinearForm({self})"
