import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrcqe.errors import FormulaSyntaxError
from qrcqe.formula import (
    And, Atom, Const, Exists, Mul, Not, Or, Rel, Var, alpha_rename, count_atoms, free_vars,
    is_quantifier_free, normalize, quantifier_depth, render,
)
from qrcqe.fuzz import random_formula
from qrcqe.parser import parse
from qrcqe.theory import PHI1


def test_parse_sentence():
    f = parse("E x. x*x + 1 = 0")
    assert isinstance(f, Exists) and f.var == "x"
    assert isinstance(f.body, Atom) and f.body.rel is Rel.eq
    assert f.body.left.args[0] == Mul((Var("x"), Var("x")))
    assert f.body.right == Const(0)


def test_parse_strict_guard():
    f = parse("0 < -1")
    assert f.rel is Rel.prec
    assert render(f) == "0 < -1"


def test_render_phi1_verbatim():
    assert render(parse(PHI1)) == PHI1


def test_render_minimal_parentheses():
    assert render(parse("E x. (x <= y & y <= x)")) == "E x. x <= y & y <= x"
    assert render(parse("(a = 1 | b = 1) & c = 1")) == "(a = 1 | b = 1) & c = 1"
    assert render(parse("x^3 = y")) == "x^3 = y"


@pytest.mark.parametrize("text, column", [
    ("E x. x +", 9),
    ("x <== y", 5),
    ("E 1. x = 0", 3),
    ("(x = 1", 7),
])
def test_syntax_error_position(text, column):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.line == 1
    assert info.value.column == column
    assert info.value.expected


def test_syntax_error_line_numbers():
    with pytest.raises(FormulaSyntaxError) as info:
        parse("x = 1 &\n y =")
    assert info.value.line == 2


def test_free_vars_examples():
    assert free_vars(parse("E x. x <= y")) == {"y"}
    assert free_vars(parse(PHI1)) == frozenset()
    assert free_vars(parse("x <= x")) == {"x"}


def test_normalize_asymp_expands():
    assert normalize(parse("x ~ y")) == parse("x <= y & y <= x")
    assert normalize(parse("x ~v y")) == parse("x <=v y & y <=v x")


def test_normalize_negated_order_becomes_strict():
    assert normalize(parse("!(x <= y)")) == parse("y < x")
    assert normalize(parse("!(x <v y)")) == parse("y <=v x")


def test_normalize_de_morgan():
    assert normalize(parse("!(x = 1 & y <= 2)")) == parse("!(x = 1) | 2 < y")
    assert normalize(parse("x != y")) == Not(parse("x = y"))


def test_normalize_keeps_free_variables_of_constants():
    f = parse("false & x < y")
    assert free_vars(normalize(f)) == {"x", "y"}


def test_alpha_rename_distinct_binders():
    f = alpha_rename(parse("(E x. x = y) & (E x. x = 1) & x = 0"))
    binders = [a.var for a in f.args if isinstance(a, Exists)]
    assert len(set(binders)) == 2 and "x" not in binders
    assert free_vars(f) == {"x", "y"}


def test_counters():
    f = parse("A x. E y. x <= y | y = 0")
    assert quantifier_depth(f) == 2
    assert count_atoms(f) == 2
    assert not is_quantifier_free(f)
    assert is_quantifier_free(parse("x = 1"))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_round_trip_property(seed):
    f = random_formula(random.Random(seed))
    assert parse(render(f)) == f


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_normalize_properties(seed):
    f = random_formula(random.Random(seed))
    n = normalize(f)
    assert normalize(n) == n
    assert free_vars(n) == free_vars(f)
    # no implications, biconditionals or negations above atoms survive
    stack = [n]
    while stack:
        g = stack.pop()
        if isinstance(g, Not):
            assert isinstance(g.arg, Atom) and g.arg.rel is Rel.eq
        elif isinstance(g, (And, Or)):
            stack.extend(g.args)
        elif isinstance(g, Exists) or hasattr(g, "body"):
            stack.append(g.body)
        elif isinstance(g, Atom):
            assert g.rel in (Rel.eq, Rel.preceq, Rel.prec, Rel.preceq_v, Rel.prec_v)
