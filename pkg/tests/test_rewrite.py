import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import polynomial_dims
from skewpbw.classify import InvalidShape
from skewpbw.corpus import corpus, fixture
from skewpbw.freealg import NcPoly, words
from skewpbw.presentation import parse_presentation
from skewpbw.rewrite import (
    BudgetExceeded,
    InsufficientCompletion,
    UnitIdeal,
    certify_pbw_basis,
    check_confluence,
    complete_bounded,
    compute_S,
    hilbert_prefix,
    interreduce,
    normal_form,
    orient,
    overlaps,
    reduce_counting,
    standard_monomial_count,
)

X, Y = NcPoly.gen(1), NcPoly.gen(2)
CERTIFIED = corpus("sridharan") + ["weyl", "poly2", "poly3", "qplane", "qaffine3", "sklyanin"]


def test_orient_qplane():
    sys = orient(fixture("qplane"))
    assert sys.rules_table() == ["y*x -> 2*x*y"]


def test_unit_ideal():
    with pytest.raises(UnitIdeal):
        interreduce(["x"], [X - 1, X])


def test_weyl_normal_form():
    sys = orient(fixture("weyl"))
    assert normal_form(sys, NcPoly.monomial((2, 2, 1))).format(["x", "y"]) == "x*y*y - 2*y"


def test_usl2_rules():
    sys = orient(fixture("usl2"))
    assert len(sys.rules) == 3
    assert all(r.lead in {(2, 1), (3, 1), (3, 2)} for r in sys.rules)


@pytest.mark.parametrize("name", CERTIFIED)
def test_certified(name):
    cert = certify_pbw_basis(fixture(name))
    assert cert.certified and cert.witness is None


def test_nonjacobi_witness():
    cert = certify_pbw_basis(fixture("nonjacobi"))
    assert not cert.certified
    assert cert.overlap_word == (3, 2, 1)
    # up to sign the left-over is x + y + z
    w = cert.witness
    assert w.degree == 1 and len(set(c for _, c in w.items())) == 1 and len(w) == 3


def test_certify_rejects_bad_shape():
    with pytest.raises(InvalidShape):
        certify_pbw_basis(fixture("x2defect"))


def test_overlaps_of_three_commutations():
    ov = overlaps(orient(fixture("poly3")).rules)
    assert [o.word for o in ov] == [(3, 2, 1)]


def test_complete_nonjacobi():
    sys, rep = complete_bounded(orient(fixture("nonjacobi")), 4)
    assert any(r.degree <= 2 for r in rep.added)
    assert hilbert_prefix(sys, 3).dims[1] < 3


def test_completion_is_noop_on_certified():
    sys = orient(fixture("sridharan6"))
    done, rep = complete_bounded(sys, 5)
    assert rep.added == () or not rep.added
    assert done.rules == sys.rules


def test_budget():
    with pytest.raises(BudgetExceeded):
        complete_bounded(orient(fixture("nonjacobi")), 6, budget=1)


def test_hilbert_needs_completion():
    sys = orient(fixture("nonjacobi"))
    with pytest.raises(InsufficientCompletion):
        hilbert_prefix(sys, 3)


@pytest.mark.parametrize("name,n", [("poly3", 3), ("sridharan6", 3), ("weyl", 2), ("qaffine3", 3), ("sklyanin", 3)])
def test_hilbert_prefix(name, n):
    sys = certify_pbw_basis(fixture(name)).system
    hp = hilbert_prefix(sys, 5)
    assert hp.dims == polynomial_dims(n, 5)
    assert all(standard_monomial_count(n, d) == hp.dims[d] for d in range(6))


@pytest.mark.parametrize("name", ["poly2", "poly3", "qplane", "qaffine3", "sklyanin"])
def test_S_sets_match_dims(name):
    p = fixture(name)
    S = compute_S(p, 5)
    sys = certify_pbw_basis(p).system
    assert S.counts == hilbert_prefix(sys, 5).dims


def test_S_set_poly2():
    S = compute_S(fixture("poly2"), 2)
    assert S.S == {(1, 1), (1, 2), (2, 2)}


def _random_poly(rng, n, max_len):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))
        terms[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return NcPoly(terms)


@pytest.mark.parametrize("name", ["weyl", "sridharan6", "sklyanin", "qaffine3", "sridharan10"])
def test_strategy_independence_and_termination(name):
    p = fixture(name)
    sys = certify_pbw_basis(p).system
    rng = random.Random(7)
    for _ in range(100):
        f = _random_poly(rng, p.n, 4)
        left, steps = reduce_counting(sys, f, "left")
        right, _ = reduce_counting(sys, f, "right")
        assert left == right == normal_form(sys, f)
        # every step removes the current top word; at most one step per word below it
        assert steps <= sum(len(list(words(p.n, d))) for d in range(max(f.degree, 0) + 1))
        assert all(sys.is_irreducible(w) for w, _ in left.items())


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(lambda c: c != 0)


@settings(max_examples=30, deadline=None)
@given(coeff, coeff, coeff)
def test_completion_noop_iff_certified(a, b, c):
    p = parse_presentation(
        "algebra r\ngenerators x, y, z\n"
        f"relation y*x = {a}*x*y\nrelation z*x = {b}*x*z\nrelation z*y = {c}*y*z + x\n")
    cert = check_confluence(orient(p))
    _, rep = complete_bounded(orient(p), 4)
    assert cert.certified == (len(rep.added) == 0)
