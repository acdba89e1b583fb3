"""Skein resolutions and the order-one vanishing property."""

import pytest
from hypothesis import given, settings, strategies as st

from knotoidh.gauss import (
    GaussCodeError,
    bundled_diagrams,
    parse_gauss_code,
    random_diagram,
    serialize,
)
from knotoidh.invariant import Invariant, TermKey, compute_H, degree, render
from knotoidh.singular import (
    make_singular,
    random_singular_diagram,
    resolutions,
    singular_H,
    verify_order_one,
)
from knotoidh.zpoly import ReductionPolicy, ZPoly

QUOT = ReductionPolicy.QUOTIENT
LIT = ReductionPolicy.LITERAL

WITNESS = bundled_diagrams()["singular_witness"]

seeds = st.integers(min_value=0, max_value=2**32 - 1)
sizes = st.integers(min_value=2, max_value=8)


def test_make_singular():
    d = random_diagram(4, 0)
    s = make_singular(d, (2, 4))
    assert s.singular_ids() == (2, 4)
    assert s.chord(1).sign == d.chord(1).sign
    with pytest.raises(GaussCodeError):
        make_singular(d, (5,))


def test_resolutions_of_a_singular_chord():
    d = parse_gauss_code("O1+ U2* O2* U1+")
    plus, minus = resolutions(d, 2)
    assert serialize(plus) == "O1+ U2+ O2+ U1+"
    assert serialize(minus) == "O1+ O2- U2- U1+"
    with pytest.raises(GaussCodeError):
        resolutions(d, 1)


def test_witness_resolutions():
    plus, minus = resolutions(WITNESS, 2)
    assert [degree(plus, c) for c in range(1, 5)] == [-2, -2, 1, 1]
    assert [degree(minus, c) for c in range(1, 5)] == [-2, 2, 1, 1]
    for policy in (QUOT, LIT):
        assert compute_H(plus, policy).is_zero()
        assert not compute_H(minus, policy).is_zero()


def test_witness_singular_invariant():
    h = singular_H(WITNESS, QUOT)
    assert render(h) == "(t^(-z) + t^z - 2)*y + (t^-1 + t - 2)*y^2"
    want = Invariant(QUOT, {
        TermKey(1, 2, ZPoly.monomial(-1, 1)): 1,
        TermKey(1, 2, ZPoly.monomial(1, 1)): 1,
        TermKey(2, 0, ZPoly.const(-1)): 1,
        TermKey(2, 0, ZPoly.const(1)): 1,
    }, {1: -2, 2: -2})
    assert h == want
    # literal mode keeps the small representative of the chord-2 index
    assert render(singular_H(WITNESS, LIT)) == \
        "(t^(z^-1) + t^(-z) - 2)*y + (t^-1 + t - 2)*y^2"


def test_singular_H_requires_a_singular_chord():
    d = random_diagram(3, 1)
    assert singular_H(d) == compute_H(d)


@settings(deadline=None)
@given(sizes, seeds, st.sampled_from(list(ReductionPolicy)))
def test_two_singular_diagrams_vanish(k, seed, policy):
    d = random_singular_diagram(k, 2, seed)
    assert len(d.singular_ids()) == 2
    assert singular_H(d, policy).is_zero()


@settings(deadline=None)
@given(st.integers(min_value=3, max_value=7), seeds)
def test_three_singular_diagrams_vanish_too(k, seed):
    d = random_singular_diagram(k, 3, seed)
    assert singular_H(d).is_zero()


def test_verify_order_one_report():
    for policy in (QUOT, LIT):
        report = verify_order_one(samples=80, max_chords=6, seed=5, policy=policy)
        assert report["ok"] is True
        assert report["two_singular_failures"] == 0
        assert report["witness_nonzero"] is True
        assert report["samples"] == 80
