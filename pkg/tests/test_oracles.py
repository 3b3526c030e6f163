from fractions import Fraction

import pytest

from qrcqe.errors import (
    FreeVariableMismatch, NotSimpleResidueRoot, PrecisionExhausted, ZeroPolynomial,
)
from qrcqe.formula import Sigma, term_to_poly
from qrcqe.models import M_A, M_R, LaurentElem, RatFuncElem
from qrcqe.oracles import (
    Base, decide_exists_acf, decide_exists_order, hensel_lift, isolate_roots, newton_polygon,
    qf_equiv_sample, sign_conditions, sturm_tarski,
)
from qrcqe.parser import parse, parse_term


def P(text: str):
    return term_to_poly(parse_term(text))


# -- Sturm and Tarski queries ---------------------------------------------------------

def test_root_count_over_q():
    assert sturm_tarski(P("x^2 - 2")) == 2
    assert sturm_tarski(P("x^2 + 1")) == 0


def test_tarski_query_opposite_signs():
    assert sturm_tarski(P("x^2 - 2"), P("x")) == 0
    assert sturm_tarski(P("x^2 - 2"), P("x"), (0, None)) == 1


def test_root_count_over_qt():
    assert sturm_tarski(P("x^2 - t"), 1, base=Base.QT) == 2
    assert sturm_tarski(P("x^2 + t"), 1, base=Base.QT) == 0
    # both roots +-sqrt(t) lie strictly between -1 and 1, and none lies above t
    assert sturm_tarski(P("x^2 - t"), 1, ("-1", "1"), base="qt") == 2
    assert sturm_tarski(P("x^2 - t"), 1, (RatFuncElem.t(), None), base=Base.QT) == 1


def test_squarefree_preprocessing_and_empty_interval():
    assert sturm_tarski(P("(x - 1)^2*(x + 2)")) == 2
    assert sturm_tarski(P("x - 1"), 1, (1, 1)) == 0
    assert sturm_tarski(P("x - 1"), 1, (2, 0)) == 0


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        sturm_tarski(P("0"))


def test_isolate_roots():
    intervals = isolate_roots(P("x^3 - 2*x"))
    assert len(intervals) == 3
    for lo, hi in intervals:
        assert lo <= hi


def test_sign_conditions():
    # p = x^2 - 1 at its roots -1 and 1; q = x has signs -1 and +1
    realized = sign_conditions([-1, 0, 1], [[0, 1]])
    assert realized == {(-1,): 1, (1,): 1}


@pytest.mark.parametrize("atoms, base, expected", [
    ([([-2, 0, 1], Sigma.EQ), ([0, 1], Sigma.GT)], Base.Q, True),
    ([([1, 0, 1], Sigma.EQ)], Base.Q, False),
    ([([-1, 0, -1], Sigma.GE)], Base.Q, False),
    ([([-1, 0, 1], Sigma.GE), ([1, 0, -1], Sigma.GE), ([0, 1], Sigma.GT)], Base.Q, True),
    ([([0, 0, 1], Sigma.NE), ([0, 1], Sigma.GT), ([1, -1], Sigma.GT)], Base.Q, True),
])
def test_decide_exists_order(atoms, base, expected):
    assert decide_exists_order(atoms, "x", base) is expected


def test_decide_exists_order_over_qt():
    t = RatFuncElem.t()
    # x^2 <= t, that is t - x^2 >= 0
    assert decide_exists_order([([t, 0, -1], Sigma.GE)], "x", Base.QT) is True
    # 0 < x < t and x^2 = t has no solution since sqrt(t) > t
    atoms = [([-t, 0, 1], Sigma.EQ), ([0, 1], Sigma.GT), ([t, -1], Sigma.GT)]
    assert decide_exists_order(atoms, "x", Base.QT) is False


# -- algebraically closed oracle --------------------------------------------------------

@pytest.mark.parametrize("eqs, neqs, expected", [
    ([[1, 0, 1]], [], True),
    ([[1, 0, 1]], [[1, 0, 1]], False),
    ([[-1, 0, 1]], [[-1, 1]], True),
    ([[-1, 1], [-2, 0, 1]], [], False),
    ([], [[0]], False),
    ([[0]], [[1]], True),
    ([[5]], [], False),
])
def test_decide_exists_acf(eqs, neqs, expected):
    assert decide_exists_acf(eqs, neqs) is expected


# -- Newton polygons and Hensel lifting -----------------------------------------------------

def test_newton_single_segment():
    poly = newton_polygon(P("x^2 - t"))
    assert poly.segments == ((Fraction(-1, 2), 2),)
    assert poly.root_values() == [Fraction(1, 2)] * 2


def test_newton_zero_root():
    poly = newton_polygon(P("x^2 - t*x"))
    assert poly.zero_root_multiplicity == 1
    assert poly.segments == ((Fraction(-1), 1),)
    assert poly.root_values() == [1]


def test_newton_point_above_hull():
    poly = newton_polygon(P("x^3 - t^2*x + t"))
    assert poly.segments == ((Fraction(-1, 3), 3),)
    assert poly.degree == 3


def test_newton_errors():
    with pytest.raises(ZeroPolynomial):
        newton_polygon([LaurentElem(), LaurentElem()])
    with pytest.raises(PrecisionExhausted):
        newton_polygon([LaurentElem.t(), LaurentElem({}, 3)])


def test_hensel_square_root_of_one_plus_t():
    r = hensel_lift(P("x^2 - (1 + t)"), 1, 4)
    assert [r.coefficient(k) for k in range(4)] == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]


def test_hensel_linear_and_double_root():
    assert hensel_lift(P("x - t"), 0, 6).coefficient(1) == 1
    with pytest.raises(NotSimpleResidueRoot):
        hensel_lift(P("x^2"), 0, 4)


# -- sampled equivalence ------------------------------------------------------------------

def test_equivalence_reflexive():
    f = parse("x <= y | y <v x")
    for m in (M_R, M_A):
        assert qf_equiv_sample(m, f, f, n=200).passed


def test_equivalence_counterexample():
    res = qf_equiv_sample(M_R, parse("x <= y"), parse("y <= x"), n=100)
    assert not res.passed and set(res.counterexample) == {"x", "y"}


def test_equivalence_asymp_shorthand():
    for m in (M_R, M_A):
        assert qf_equiv_sample(m, parse("x ~ y"), parse("x <= y & y <= x"), n=300).passed


def test_equivalence_free_variable_mismatch():
    with pytest.raises(FreeVariableMismatch):
        qf_equiv_sample(M_R, parse("x = 0"), parse("y = 0"))
    assert qf_equiv_sample(M_R, parse("x = x"), parse("y = y"), n=20, variables={"x", "y"}).passed
