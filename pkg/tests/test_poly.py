from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrcqe import dense
from qrcqe.errors import ZeroInput
from qrcqe.formula import term_to_poly
from qrcqe.parser import parse_term
from qrcqe.poly import (
    ONE, ZERO, Polynomial, poly_arith, prem, principal_coefficients, substitute_poly,
    subresultant, subresultant_chain,
)


def P(text: str) -> Polynomial:
    return term_to_poly(parse_term(text))


X, Y = Polynomial.var("x"), Polynomial.var("y")


def test_arith_examples():
    assert poly_arith(P("x+1"), P("x-1"), "add") == X * 2
    assert poly_arith(P("x+1"), P("x-1"), "mul") == P("x*x - 1")
    assert poly_arith(P("x^3 - x"), None, "derivative", "x") == P("3*x^2 - 1")
    assert poly_arith(P("x"), None, "neg") == -X
    with pytest.raises(ValueError):
        poly_arith(X, X, "div")


def test_substitute_examples():
    assert substitute_poly(P("x^2 + 1"), "x", P("t - 1")) == P("t^2 - 2*t + 2")
    assert substitute_poly(P("x^2 + 1"), "x", ZERO) == ONE
    assert substitute_poly(P("x*y"), "x", Y) == P("y^2")


def test_structure_queries():
    p = P("3*x^2*y + x - 5")
    assert p.degree("x") == 2 and p.degree("y") == 1 and p.degree("z") == 0
    assert p.total_degree() == 3
    assert p.coeff_list("x") == [P("-5"), ONE, P("3*y")]
    assert p.leading_coeff("x") == P("3*y")
    assert p.variables() == {"x", "y"}
    assert ZERO.degree("x") < 0 and ZERO.is_zero()
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == 3


def test_chain_common_factor():
    chain = subresultant_chain(P("x^2 - 1"), P("x - 1"), "x")
    last = chain.last
    assert last.degree("x") == 1
    # proportional to x - 1: vanishes at 1
    assert last.evaluate({"x": 1}) == 0
    assert chain.resultant.is_zero()


def test_chain_resultant_value():
    chain = subresultant_chain(P("x^2 + 1"), P("x - 1"), "x")
    assert abs(chain.resultant.constant_value()) == 2


def test_chain_constant_divisor():
    chain = subresultant_chain(P("x^2 - 2"), P("3"), "x")
    assert chain.entries == (P("x^2 - 2"), P("3"))
    assert chain.resultant == P("9")


def test_chain_zero_input():
    with pytest.raises(ZeroInput):
        subresultant_chain(ZERO, X, "x")


def test_parametric_principal_coefficients():
    f, g = P("x^2 - y"), P("x - z")
    pscs = principal_coefficients(f, g, "x")
    # psc_0 is the resultant f(z) = z^2 - y up to sign
    assert pscs[0] in (P("z^2 - y"), P("y - z^2"))
    assert subresultant(f, g, "x", 1).degree("x") <= 1


small = st.integers(-4, 4)


@st.composite
def polys(draw, names=("x", "y"), max_terms=4):
    p = ZERO
    for _ in range(draw(st.integers(0, max_terms))):
        mono = ONE
        for n in names:
            mono = mono * Polynomial.var(n) ** draw(st.integers(0, 2))
        p = p + mono * draw(small)
    return p


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_prem_identity(a, b):
    if b.degree("x") < 1:
        return
    r = prem(a, b, "x")
    assert r.degree("x") < b.degree("x")
    k = max(a.degree("x") - b.degree("x") + 1, 0)
    # lc^k * a - r is divisible by b: it vanishes on every root of b
    lhs = b.leading_coeff("x") ** k * a - r
    assert prem(lhs, b, "x").is_zero()


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4))
def test_dense_divmod(a, b):
    a, b = dense.strip(a), dense.strip(b)
    if not b:
        return
    q, r = dense.divmod_(a, b)
    assert dense.add(dense.mul(q, b), r) == a
    assert dense.degree(r) < dense.degree(b)


def test_dense_gcd_and_squarefree():
    f = dense.mul([-1, 1], dense.mul([-1, 1], [2, 0, 1]))  # (x-1)^2 (x^2+2)
    assert dense.gcd(f, dense.derivative(f)) == [-1, 1]
    assert dense.squarefree_part(f) == dense.monic(dense.mul([-1, 1], [2, 0, 1]))
