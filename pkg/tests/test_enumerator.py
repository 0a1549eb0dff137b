import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhtrees import corpus
from dhtrees.errors import NotDistanceHereditaryError
from dhtrees.enumerator import (Enumerator, compose, compose_enumerators, cycle_enumerator,
                                extension_enumerator, extension_identity_check,
                                factor_enumerator, gao_liu_enumerator, gao_liu_reference,
                                graph_enumerator, superprism_enumerator)
from dhtrees.families import (complete, complete_bipartite, complete_multipartite, cycle,
                              edgeless, ferrers_young, gem, inversion_graph, path, superprism,
                              threshold_graph, wheel)
from dhtrees.graph import Graph, compose_graphs, cone
from dhtrees.linalg import brute_force_enumerator, enumerator_value
from dhtrees.poly import LinearForm, SparsePoly
from oracles import connected_graphs, naive_enumerator

x = SparsePoly.var


def lin(*vs):
    return LinearForm.sum_of(vs)


def ones(g):
    return {v: 1 for v in g.vertices}


# -- substitution --------------------------------------------------------------

def test_substitute_single_factor():
    e = Enumerator.linear(lin(1)).substitute(1, lin(2, 3))
    assert e.factor_multiset() == {lin(2, 3): 1}


def test_substitute_into_c4_remainder():
    e = Enumerator.from_poly(brute_force_enumerator(cycle(4)))
    out = e.substitute(0, lin(10, 11))
    # two of the four monomials contain x0, each splits in two
    assert len(out.remainder) == 6
    assert out.remainder == naive_enumerator(cycle(4)).substitute(0, x(10) + x(11))


def test_substitute_identity_form():
    e = factor_enumerator(complete_bipartite(2, 3))
    assert e.substitute(0, lin(0)) == e


def test_substitute_to_zero_form():
    e = Enumerator.linear(LinearForm({0: 1, 1: -1}))
    assert e.substitute(0, lin(1)).is_zero()


# -- factorization of distance-hereditary graphs -------------------------------

def test_factor_examples():
    assert factor_enumerator(path(3)) == Enumerator.linear(lin(1))
    assert factor_enumerator(complete(4)) == Enumerator.linear(lin(0, 1, 2, 3), 2)
    k23 = factor_enumerator(complete_bipartite(2, 3))
    assert k23.factor_multiset() == {lin(0, 1): 2, lin(2, 3, 4): 1}
    assert k23.expand() == naive_enumerator(complete_bipartite(2, 3))


def test_factor_rejects_non_dh():
    with pytest.raises(NotDistanceHereditaryError):
        factor_enumerator(gem())
    with pytest.raises(ValueError):
        factor_enumerator(Graph({0: ()}))


@pytest.mark.parametrize("n", range(2, 8))
def test_complete_graph_classical(n):
    assert factor_enumerator(complete(n)).expand() == lin(*range(n)).to_poly() ** (n - 2)


@pytest.mark.parametrize("sizes", [(2, 3), (3, 3), (1, 4), (2, 2, 2), (1, 2, 3)])
def test_complete_multipartite_classical(sizes):
    g = complete_multipartite(sizes)
    e = factor_enumerator(g)
    # each part contributes (sum over the other parts) and the whole sum closes the count
    assert e.expand() == brute_force_enumerator(g)
    assert e.evaluate(ones(g)) == sum(sizes) ** (len(sizes) - 2) * _prod(
        (sum(sizes) - s) ** (s - 1) for s in sizes)


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out


@pytest.mark.parametrize("parts", [(2, 1), (3, 2, 2), (4, 3, 1), (2, 2, 2, 1)])
def test_ferrers_young_enumerator_matches_oracle(parts):
    g, _ = ferrers_young(parts)
    e = factor_enumerator(g)
    assert e.is_linear_product() and e.expand() == brute_force_enumerator(g)


@pytest.mark.parametrize("seq", ["idid", "iiddid", "iiidid", "iiiid"])
def test_threshold_enumerator_matches_oracle(seq):
    g = threshold_graph(list(seq))
    if not g.is_connected():
        pytest.skip("creation ends with an isolated vertex")
    assert factor_enumerator(g).expand() == brute_force_enumerator(g)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=7))
def test_factor_matches_oracle_and_is_homogeneous(g):
    try:
        e = factor_enumerator(g)
    except NotDistanceHereditaryError:
        return
    assert not e.nonlinear
    p = e.expand()
    assert p == brute_force_enumerator(g)
    assert p.degrees() == {g.n - 2}
    assert all(c > 0 for c in p.terms.values())


# -- evaluation ----------------------------------------------------------------

def test_evaluate_examples():
    assert superprism_enumerator(4).evaluate(ones(superprism(4))) == 4096
    assert factor_enumerator(complete(4)).evaluate(ones(complete(4))) == 16
    e = factor_enumerator(complete_bipartite(2, 3))
    assert e.evaluate({0: 1, 1: -1, 2: 5, 3: 1, 4: 1}) == 0
    with pytest.raises(KeyError):
        e.evaluate({0: 1})


# -- composition -----------------------------------------------------------------

def test_compose_k2_with_k2():
    h, e, _ = compose(complete(2), 1, Enumerator.one(), complete(2), 1, Enumerator.one())
    assert h.m == 1 and e == Enumerator.one()


def test_compose_with_triangle_is_true_twin_rule():
    g = complete_bipartite(2, 3)
    eg = factor_enumerator(g)
    h, e, shift = compose(g, 0, eg, complete(3), 2, factor_enumerator(complete(3)))
    y1, y2 = shift[0], shift[1]
    expected = eg.substitute(0, lin(y1, y2)) * Enumerator.linear(lin(y1, y2, 2, 3, 4))
    assert e == expected
    assert e.expand() == brute_force_enumerator(h)


def test_compose_enumerators_raw_signature():
    # glue two stars at their centres: the neighbourhoods get joined completely
    g = complete_bipartite(1, 2)
    e1 = graph_enumerator(g)
    h, shift = compose_graphs(g, 0, g, 0)
    e = compose_enumerators(e1, 0, [shift[1], shift[2]], e1.relabel({0: 99}), 99, [1, 2])
    assert e.expand() == brute_force_enumerator(h)


def test_two_wheels_make_two_quartics():
    w = wheel(5)
    ew = graph_enumerator(w)
    h, e, _ = compose(w, 5, ew, w, 5, ew)
    assert [p.total_degree() for p in e.nonlinear] == [4, 4] and not e.factors
    rng = random.Random(0)
    for _ in range(20):
        pt = corpus.nonzero_point(rng, h.vertices)
        assert e.evaluate(pt) == enumerator_value(h, pt)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=6), connected_graphs(max_n=6), st.data())
def test_composition_theorem(g1, g2, data):
    v1 = data.draw(st.sampled_from(g1.vertices))
    v2 = data.draw(st.sampled_from(g2.vertices))
    h, e, _ = compose(g1, v1, graph_enumerator(g1), g2, v2, graph_enumerator(g2))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    for _ in range(5):
        pt = corpus.nonzero_point(rng, h.vertices)
        assert e.evaluate(pt) == enumerator_value(h, pt)


# -- closed forms --------------------------------------------------------------

def test_cycle_enumerator():
    assert cycle_enumerator(3).remainder == x(0) + x(1) + x(2)
    assert cycle_enumerator(4).remainder == x(2) * x(3) + x(0) * x(3) + x(0) * x(1) + x(1) * x(2)
    assert cycle_enumerator(4).remainder == naive_enumerator(cycle(4))
    assert cycle_enumerator(5).evaluate(ones(cycle(5))) == 5
    assert not cycle_enumerator(6).factors
    with pytest.raises(ValueError):
        cycle_enumerator(2)


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_enumerator_matches_oracle(n):
    assert cycle_enumerator(n).remainder == brute_force_enumerator(cycle(n))


def test_superprism_enumerator():
    assert superprism_enumerator(5).evaluate(ones(superprism(5))) == 5 * 2 ** 13
    rng = random.Random(4)
    for _ in range(10):
        pt = corpus.nonzero_point(rng, range(8))
        assert superprism_enumerator(4).evaluate(pt) == enumerator_value(superprism(4), pt)
    with pytest.raises(ValueError):
        superprism_enumerator(3)


def test_superprism_4_expands_to_oracle():
    assert superprism_enumerator(4).expand() == brute_force_enumerator(superprism(4))


def test_extension_enumerator_examples():
    assert extension_enumerator(Graph({0: ()})) == Enumerator.one()
    assert extension_enumerator(complete(2)) == Enumerator.linear(lin(0, 1, 2))
    e = extension_enumerator(path(4))
    assert not e.is_linear_product()
    assert e.remainder == brute_force_enumerator(cone(path(4))[0])


def test_gao_liu_examples():
    assert gao_liu_enumerator([2, 1]) == Enumerator.linear(lin(0, 1, 2))
    ident = gao_liu_enumerator([1, 2, 3])
    assert ident == factor_enumerator(cone(edgeless(3).relabel({0: 1, 1: 2, 2: 3}), apex=0)[0])
    e = gao_liu_enumerator([2, 1, 4, 3])
    assert len(e.factors) == 3 and e.same_factorization(gao_liu_reference([2, 1, 4, 3]))
    h, _ = cone(inversion_graph([2, 1, 4, 3]), apex=0)
    rng = random.Random(2)
    for _ in range(10):
        pt = corpus.nonzero_point(rng, h.vertices)
        assert e.evaluate(pt) == enumerator_value(h, pt)
    with pytest.raises(ValueError):
        gao_liu_enumerator([2, 4, 1, 3])


def test_extension_identity_small():
    for g in corpus.small_graphs(5, min_n=2):
        assert extension_identity_check(g)


# -- serialization ---------------------------------------------------------------

@pytest.mark.parametrize("e", [
    Enumerator.one(),
    Enumerator(0),
    factor_enumerator(complete_bipartite(2, 3)),
    superprism_enumerator(4),
    Enumerator(-6, [(lin(0, 1), 2)], [x(0) * x(1) + SparsePoly.constant(2), x(3) ** 2 + x(4)]),
], ids=["one", "zero", "k23", "s4", "mixed"])
def test_serialization_round_trip(e):
    text = e.serialize()
    back = Enumerator.parse(text)
    assert back.serialize() == text
    assert back.same_factorization(e)
    assert len(back.nonlinear) == len(e.nonlinear)


def test_serialization_format():
    assert factor_enumerator(complete_bipartite(2, 3)).serialize() == \
        "1\n2 : 1*x0 + 1*x1\n1 : 1*x2 + 1*x3 + 1*x4\n"
    assert cycle_enumerator(3).serialize() == "1\n--\n1 : x0^1\n1 : x1^1\n1 : x2^1\n"


def test_canonical_forms_pull_content():
    e = Enumerator(1, [(LinearForm({0: -2, 1: -2}), 3)])
    assert e.constant == -8 and e.factor_multiset() == {lin(0, 1): 3}
    assert e.evaluate({0: Fraction(1, 2), 1: Fraction(1, 2)}) == -8
