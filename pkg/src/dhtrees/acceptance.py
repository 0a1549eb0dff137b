"""Acceptance criteria, runnable from pytest and from ``dhtrees selftest``.

Every check is exact: a single mismatch fails its criterion.  Criteria with a
time budget also fail when they overrun it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import corpus
from .ehrenborg import (blowup_identity_check, check_numeric, check_polynomial,
                        ferrers_sweep, random_connected_bipartite, random_point)
from .enumerator import (compose, extension_identity_check, factor_enumerator,
                         gao_liu_enumerator, gao_liu_reference, graph_enumerator,
                         superprism_enumerator)
from .families import inversion_graph, is_separable, superprism, wheel
from .graph import cone
from .linalg import brute_force_enumerator, det_rank_one_check, enumerator_value, tree_count
from .recognition import find_forbidden, four_point_check, is_cograph, recognize_dh


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f"/{self.budget:.0f}s" if self.budget else ""
        return f"{status} [{self.number:2d}] {self.name} ({self.elapsed:.2f}s{budget}) {self.detail}"


CRITERIA: list[tuple[int, str, float | None, Callable[[int], tuple[bool, str]]]] = []


def criterion(number: int, name: str, budget: float | None = None):
    def register(fn):
        CRITERIA.append((number, name, budget, fn))
        return fn
    return register


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    for num, name, budget, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            ok, detail = fn(seed)
            elapsed = time.perf_counter() - start
            if budget is not None and elapsed > budget:
                ok, detail = False, f"{detail}; over time budget"
            return CriterionResult(num, name, ok, detail, elapsed, budget)
    raise KeyError(number)


def run_all(seed: int = 0, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for num, *_ in sorted(CRITERIA, key=lambda c: c[0]):
        res = run_criterion(num, seed)
        if echo:
            echo(res.line())
        results.append(res)
    return results


def _ones(g) -> dict[int, int]:
    return {v: 1 for v in g.vertices}


@criterion(1, "superprism tree counts n=4..10", budget=5)
def superprism_counts(seed: int) -> tuple[bool, str]:
    bad = []
    for n in range(4, 11):
        want = n * 2 ** (3 * n - 2)
        g = superprism(n)
        via_formula = superprism_enumerator(n).evaluate(_ones(g))
        via_kirchhoff = tree_count(g)
        if not (via_formula == via_kirchhoff == want):
            bad.append((n, via_formula, via_kirchhoff, want))
    return not bad, f"mismatches={bad}" if bad else "7 sizes, both routes exact"


@criterion(2, "factored enumerator equals brute force on DH corpus", budget=60)
def factor_vs_brute_force(seed: int) -> tuple[bool, str]:
    checked, bad = 0, 0
    for g in corpus.dh_corpus(seed):
        if not recognize_dh(g):
            continue
        checked += 1
        e = factor_enumerator(g)
        if not e.is_linear_product() or e.expand() != brute_force_enumerator(g):
            bad += 1
    return bad == 0 and checked > 0, f"{checked} DH graphs, {bad} mismatches"


@criterion(3, "three DH recognizers agree", budget=120)
def recognizer_agreement(seed: int) -> tuple[bool, str]:
    total, dh, bad = 0, 0, []
    for g in corpus.dh_corpus(seed):
        total += 1
        a = bool(recognize_dh(g))
        b = find_forbidden(g) is None
        c = four_point_check(g)
        dh += a
        if not (a == b == c):
            bad.append(g)
    return not bad, f"{total} graphs ({dh} DH), {len(bad)} disagreements"


@criterion(4, "composition matches weighted-Laplacian oracle", budget=60)
def composition_oracle(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 4)
    bad = 0
    for _ in range(200):
        g1 = corpus.random_connected_graph(rng, rng.randint(2, 6))
        g2 = corpus.random_connected_graph(rng, rng.randint(2, 6))
        v1, v2 = rng.choice(g1.vertices), rng.choice(g2.vertices)
        h, e, _ = compose(g1, v1, graph_enumerator(g1), g2, v2, graph_enumerator(g2))
        for _ in range(5):
            x = corpus.nonzero_point(rng, h.vertices)
            if e.evaluate(x) != enumerator_value(h, x):
                bad += 1
    return bad == 0, f"200 pairs x 5 points, {bad} mismatches"


@criterion(5, "two C5 joined: product of two quartics")
def two_c5_join(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 5)
    w = wheel(5)
    ew = graph_enumerator(w)
    h, e, _ = compose(w, 5, ew, w, 5, ew)
    shape_ok = (not e.factors and len(e.nonlinear) == 2
                and all(p.is_homogeneous() and p.total_degree() == 4 for p in e.nonlinear))
    # the glued graph is the complete join of two disjoint 5-cycles
    joined = h.n == 10 and h.m == 35 and all(h.degree(v) == 7 for v in h.vertices)
    bad = sum(e.evaluate(x) != enumerator_value(h, x)
              for x in (corpus.nonzero_point(rng, h.vertices) for _ in range(20)))
    ok = shape_ok and joined and bad == 0
    return ok, f"factors={[p.total_degree() for p in e.nonlinear]}, join={joined}, {bad}/20 mismatches"


@criterion(6, "rank-one perturbation identity", budget=30)
def rank_one(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 6)
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        g = corpus.random_graph(rng, n)
        a = [rng.randint(-9, 9) for _ in range(n)]
        b = [rng.randint(-9, 9) for _ in range(n)]
        bad += not det_rank_one_check(g, a, b)[2]
    return bad == 0, f"500 triples, {bad} failures"


@criterion(7, "extension identity on connected graphs n<=6")
def extension_identity(seed: int) -> tuple[bool, str]:
    graphs = corpus.small_graphs(6, min_n=2)
    bad = sum(not extension_identity_check(g) for g in graphs)
    return bad == 0, f"{len(graphs)} graphs, {bad} mismatches"


@criterion(8, "cone factors linearly iff cograph (n<=7)")
def cone_dichotomy(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 8)
    graphs = corpus.small_graphs(7, min_n=1, connected=False)
    bad, cographs = 0, 0
    for g in graphs:
        h, apex = cone(g)
        seq = recognize_dh(h)
        factors = False
        if seq:
            e = factor_enumerator(h)
            factors = e.is_linear_product()
            x = corpus.nonzero_point(rng, h.vertices)
            if e.evaluate(x) != enumerator_value(h, x):
                bad += 1
        cog = bool(is_cograph(g))
        cographs += cog
        bad += factors != cog
    return bad == 0, f"{len(graphs)} graphs ({cographs} cographs), {bad} disagreements"


@criterion(9, "Gao-Liu closed form for separable permutations n<=7")
def gao_liu(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 9)
    count, bad = 0, 0
    for n in range(1, 8):
        for w in permutations(range(1, n + 1)):
            if not is_separable(w):
                continue
            count += 1
            closed = gao_liu_enumerator(w)
            ref = gao_liu_reference(w)
            if not closed.same_factorization(ref):
                bad += 1
                continue
            h, _ = cone(inversion_graph(w), apex=0)
            for _ in range(5):
                x = corpus.nonzero_point(rng, h.vertices)
                bad += closed.evaluate(x) != enumerator_value(h, x)
    return bad == 0, f"{count} separable permutations, {bad} mismatches"


@criterion(10, "Ehrenborg conjectures and blow-up identity")
def ehrenborg_support(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 10)
    violations = []
    poly_checks = 0
    for _ in range(10_000):
        n = rng.randint(2, 12)
        g, cert = random_connected_bipartite(rng, n, rng.uniform(0.25, 0.9))
        r = check_numeric(g, cert)
        if not r.holds:
            violations.append(("numeric", r))
        if n <= 9:
            for _ in range(3):
                r = check_polynomial(g, cert, random_point(rng, g.vertices))
                poly_checks += 1
                if not r.holds:
                    violations.append(("polynomial", r))
    fy = ferrers_sweep(9, points=10, seed=seed)
    fy_bad = [r for r in fy if r.ratio != 1]
    blow_bad = 0
    for _ in range(200):
        n = rng.randint(2, 5)
        g = corpus.random_connected_graph(rng, n)
        z = {v: 1 for v in g.vertices}
        for _ in range(rng.randint(0, 10 - n)):
            z[rng.choice(g.vertices)] += 1
        blow_bad += not blowup_identity_check(g, z)
    for kind, r in violations:
        print(f"COUNTEREXAMPLE ({kind}): graph {r.graph} lhs={r.lhs} rhs={r.rhs}")
    ok = not violations and not fy_bad and blow_bad == 0
    return ok, (f"10000 graphs, {poly_checks} polynomial points, {len(violations)} violations; "
                f"{len(fy)} Ferrers-Young reports, {len(fy_bad)} not tight; "
                f"200 blow-ups, {blow_bad} failures")
