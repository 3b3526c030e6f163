import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrcqe.errors import MissingAssignment, NoSquareRoot
from qrcqe.formula import normalize
from qrcqe.models import (
    M_A, M_R, LaurentElem, RatFuncElem, TruthValue, check_axioms_sampled, eval_qf,
    has_square_root, model_by_name, sample, series_sqrt, value_le,
)
from qrcqe.models.core import draw_raw
from qrcqe.parser import parse
from qrcqe.theory import SQUARE_ROOT, sigma_qo

T_R = RatFuncElem.t()
T_A = LaurentElem.t()


def test_eval_order_infinitesimal():
    assert eval_qf(M_R, parse("x < y"), {"x": T_R, "y": 1}) is TruthValue.TRUE
    assert eval_qf(M_R, parse("0 < x"), {"x": T_R}) is TruthValue.TRUE
    assert eval_qf(M_R, parse("x < 0"), {"x": -T_R}) is TruthValue.TRUE
    assert eval_qf(M_R, parse("1 < x"), {"x": 1 / T_R}) is TruthValue.TRUE


def test_eval_value_relation_in_mr():
    assert eval_qf(M_R, parse("x ~v x + x"), {"x": T_R}) is TruthValue.TRUE
    assert eval_qf(M_R, parse("x <v 1"), {"x": T_R}) is TruthValue.TRUE
    assert eval_qf(M_R, parse("1 <v x"), {"x": T_R}) is TruthValue.FALSE


def test_eval_indeterminate_equality_in_ma():
    x = LaurentElem.from_relative(0, [1, 2, 3], 3)
    y = LaurentElem.from_relative(0, [1, 2, 3, 4], 3)
    assert eval_qf(M_A, parse("x = y"), {"x": x, "y": y}) is TruthValue.INDETERMINATE
    assert eval_qf(M_A, parse("x = y"), {"x": x, "y": y}, to_precision=True) is TruthValue.TRUE


def test_eval_ma_order_is_value_order():
    assert eval_qf(M_A, parse("0 < -1"), {}) is TruthValue.TRUE
    # a <= b iff v(b) <= v(a): t is below 1, and -1 is equivalent to 1
    assert eval_qf(M_A, parse("x <= y"), {"x": T_A, "y": 1}) is TruthValue.TRUE
    assert eval_qf(M_A, parse("y <= x"), {"x": T_A, "y": 1}) is TruthValue.FALSE
    assert eval_qf(M_A, parse("-1 ~ 1"), {}) is TruthValue.TRUE


def test_eval_missing_assignment():
    with pytest.raises(MissingAssignment):
        eval_qf(M_R, parse("x < y"), {"x": 1})


def test_model_lookup():
    assert model_by_name("MR") is M_R and model_by_name("ma") is M_A
    with pytest.raises(ValueError):
        model_by_name("mx")


def test_sample_is_deterministic_and_bounded():
    assert sample(M_R, 7, 2) == sample(M_R, 7, 2)
    assert sample(M_A, 7, 2) == sample(M_A, 7, 2)
    for seed in range(200):
        r = sample(M_R, seed, 1)
        assert len(r.num) <= 2 and len(r.den) <= 2 and r.den
        a = sample(M_A, seed, 2)
        assert a.order is None or -2 <= a.order <= 2
    with pytest.raises(ValueError):
        sample(M_R, 1, 0)


def test_element_printing():
    assert str(LaurentElem.from_relative(1, [1, 2], 3)).endswith("+ O(t^4)")
    assert "/" in str(RatFuncElem.t() / (RatFuncElem.t() + 1))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_ratfunc_canonical(num, den):
    if not any(den):
        return
    a = RatFuncElem(num, den)
    scaled = RatFuncElem([3 * c for c in num] + [0], [0] + [3 * c for c in den])
    assert a == scaled * RatFuncElem.t()
    if a.is_zero():
        assert a.sign() == 0
    else:
        assert (a * a).sign() == 1
        assert (a / a) == RatFuncElem.coerce(1)


def test_laurent_value_order():
    assert value_le(T_A, LaurentElem.coerce(1)) is False
    assert value_le(LaurentElem.coerce(1), T_A) is True
    unknown = LaurentElem({}, 5)
    assert value_le(T_A, unknown) is True
    assert value_le(unknown, T_A) is False
    assert value_le(T_A ** 7, unknown) is None


def test_series_sqrt_examples():
    one_plus_t = LaurentElem({0: 1, 1: 1})
    r = series_sqrt(one_plus_t)
    assert r.coefficient(0) == 1 and r.coefficient(1) == Fraction(1, 2)
    assert r.coefficient(2) == Fraction(-1, 8)
    assert (r * r - one_plus_t).is_zero(to_precision=True)
    assert series_sqrt(LaurentElem({2: 4})) == LaurentElem({1: 2})


@pytest.mark.parametrize("s, reason", [
    (LaurentElem.t(), "odd order"),
    (LaurentElem({0: 2}), "non-square leading coefficient"),
    (LaurentElem({0: -1}), "non-square leading coefficient"),
])
def test_series_sqrt_failures(s, reason):
    with pytest.raises(NoSquareRoot, match=reason):
        series_sqrt(s)
    assert not has_square_root(s)


def test_eval_respects_normalization():
    rng = random.Random(3)
    f = parse("!(x ~ y) | (x <=v z -> !(y < z))")
    for m in (M_R, M_A):
        for _ in range(200):
            env = {n: draw_raw(m, rng, 2) for n in "xyz"}
            env = {k: (v.freeze() if hasattr(v, "freeze") else v) for k, v in env.items()}
            a, b = eval_qf(m, f, env), eval_qf(m, normalize(f), env)
            if a.determinate and b.determinate:
                assert a == b


def test_corrupted_q2_detected_only_in_ma():
    corrupted = parse("A x. A y. A z. x <= y -> x + z <= y + z")
    assert check_axioms_sampled(M_R, [corrupted], n=2000, natural_valuation=False).ok
    report = check_axioms_sampled(M_A, [corrupted], n=2000)
    assert report.violations > 0 and report.first_counterexample is not None


def test_square_root_axiom_in_ma():
    axiom = [parse(SQUARE_ROOT)]

    def square_friendly(env):
        x = env["x"]
        return x.is_exact_zero() or (x.order % 2 == 0 and has_square_root(x))
    filtered = check_axioms_sampled(M_A, axiom, n=500, where=square_friendly)
    assert filtered.ok and filtered.results[0].witness_missing == 0
    unfiltered = check_axioms_sampled(M_A, axiom, n=500)
    assert unfiltered.violations == 0 and unfiltered.results[0].witness_missing > 0


def test_sigma_qo_small_run_both_models():
    for m in (M_R, M_A):
        report = check_axioms_sampled(m, sigma_qo(), n=200, seed=5)
        assert report.ok, report.first_counterexample
