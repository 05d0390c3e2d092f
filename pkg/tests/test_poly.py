from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weiljet.errors import ParseError, VariableCountMismatch
from weiljet.poly import (
    MonomialIdeal,
    Polynomial,
    normal_form,
    parse_poly,
    poly_add,
    poly_mul,
    substitute,
)

NV = 4


def P(text, nvars=NV):
    return parse_poly(text, nvars)


@st.composite
def polys(draw, nvars=NV, max_terms=5, max_exp=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars))
        m = tuple((i, e) for i, e in enumerate(exps) if e)
        c = Fraction(draw(st.integers(-6, 6)), draw(st.integers(1, 4)))
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms, nvars)


@st.composite
def ideals(draw, nvars=NV):
    gens = []
    for _ in range(draw(st.integers(1, 4))):
        exps = draw(st.lists(st.integers(0, 3), min_size=nvars, max_size=nvars))
        m = tuple((i, e) for i, e in enumerate(exps) if e)
        if m:
            gens.append(m)
    if not gens:
        gens = [((0, 2),)]
    return MonomialIdeal(gens, nvars)


def test_add_examples():
    assert poly_add(P("X1"), P("X1")) == P("2*X1")
    p = P("1 + 3*X2*X3 - 1/2*X4^2")
    assert poly_add(p, Polynomial.zero(NV)) == p
    assert poly_add(P("1 + X1"), P("1 - X1")) == P("2")
    assert poly_add(P("1 + X1"), P("1 - X1")) == 2


def test_mul_examples():
    assert poly_mul(P("1 + X", 1), P("1 + X", 1)) == P("1 + 2*X + X^2", 1)
    p = P("X1 - 7/3*X2^2")
    assert poly_mul(p, Polynomial.constant(1, NV)) == p
    assert poly_mul(P("X1"), P("X2")) == P("X1*X2")


def test_variable_count_mismatch():
    with pytest.raises(VariableCountMismatch):
        poly_add(P("X1", 2), P("X1", 3))
    with pytest.raises(VariableCountMismatch):
        poly_mul(P("X1", 2), P("X1", 3))


def test_normal_form_examples():
    assert normal_form(P("X^2", 1), MonomialIdeal([((0, 2),)], 1)).is_zero()
    p = P("1 + 2*X + X^2", 1)
    assert normal_form(p, MonomialIdeal([((0, 3),)], 1)) == p
    ideal = MonomialIdeal([((0, 2),), ((1, 2),), ((2, 2),), ((0, 1), (1, 1), (2, 1))], 3)
    assert normal_form(P("X1*X2*X3 + X1", 3), ideal) == P("X1", 3)


def test_ideal_is_minimalized():
    ideal = MonomialIdeal([((0, 2),), ((0, 3),), ((0, 2), (1, 1))], 2)
    assert ideal.gens == (((0, 2),),)
    assert ((0, 5), (1, 2)) in ideal
    assert ((1, 7),) not in ideal


def test_substitute_examples():
    assert substitute(P("X", 1), [P("X^2", 1)]) == P("X^2", 1)
    p = P("3 + X1*X2^2 - X4")
    ident = [Polynomial.variable(i, NV) for i in range(NV)]
    assert substitute(p, ident) == p
    assert substitute(P("X1*X2", 2), [P("X1", 2), P("X1", 2)]) == P("X1^2", 2)
    with pytest.raises(VariableCountMismatch):
        substitute(P("X1*X2", 2), [P("X1", 2)])


def test_parse_errors():
    for bad in ["", "X1 +", "2**X1", "1/0", "X1^a", "Y1"]:
        with pytest.raises(ParseError):
            parse_poly(bad, 4)
    with pytest.raises(VariableCountMismatch):
        parse_poly("X5", 4)


def test_named_polynomials():
    a, b = Polynomial.symbol("a"), Polynomial.symbol("b")
    p = (a + b) ** 2
    assert str(p) == "a^2 + 2*a*b + b^2"
    assert p.evaluate({"a": 1, "b": Fraction(1, 2)}) == Fraction(9, 4)
    assert p.diff("a") == 2 * a + 2 * b
    assert parse_poly(str(p)) == p


def test_printing_order():
    assert str(P("X2 + X1 + 1 + X1*X2 - X1^2")) == "1 + X1 + X2 - X1^2 + X1*X2"


@given(polys())
def test_parse_print_round_trip(p):
    assert parse_poly(str(p), NV) == p


@given(polys(), ideals())
def test_normal_form_idempotent(p, ideal):
    once = normal_form(p, ideal)
    assert normal_form(once, ideal) == once
    assert all(m not in ideal for m in once.terms)


@given(polys(), polys(), ideals())
def test_normal_form_is_ring_map(p, q, ideal):
    lhs = normal_form(p * q, ideal)
    rhs = normal_form(normal_form(p, ideal) * normal_form(q, ideal), ideal)
    assert lhs == rhs
    assert normal_form(p + q, ideal) == normal_form(p, ideal) + normal_form(q, ideal)


@given(polys(), st.lists(polys(nvars=3, max_terms=3, max_exp=2), min_size=NV, max_size=NV),
       st.lists(polys(nvars=2, max_terms=3, max_exp=2), min_size=3, max_size=3))
def test_substitute_composes(p, f, g):
    fg = [substitute(fj, g) for fj in f]
    assert substitute(substitute(p, f), g) == substitute(p, fg)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0
