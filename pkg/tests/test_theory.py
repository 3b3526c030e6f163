import pytest

from qrcqe.errors import EvenBound
from qrcqe.formula import free_vars, render
from qrcqe.models import M_A, M_R, TruthValue, eval_qf
from qrcqe.parser import parse
from qrcqe.theory import (
    PHI2, SQUARE_ROOT, Branch, CompletionConfig, branch_axiom, sigma_qo, sigma_qrc,
)


def test_sigma_qo_contains_q2_and_phi2():
    axioms = sigma_qo()
    assert parse("A x. A y. A z. (x <= y & !(z ~ y)) -> x+z <= y+z") in axioms
    assert parse(PHI2) in axioms


def test_sigma_qo_members_are_sentences():
    assert all(free_vars(a) == frozenset() for a in sigma_qo())
    texts = [render(a) for a in sigma_qo()]
    assert len(texts) == len(set(texts))


@pytest.mark.parametrize("bound", [1, 3, 5])
def test_sigma_qrc_extends_sigma_qo(bound):
    axioms = sigma_qrc(bound)
    assert set(sigma_qo()) <= set(axioms)
    assert parse(SQUARE_ROOT) in axioms


def test_sigma_qrc_odd_degree_sentences():
    assert parse("A a0. E x. x + a0 = 0") in sigma_qrc(1)
    assert parse("A a0. A a1. A a2. E x. x^3 + a2*x^2 + a1*x + a0 = 0") in sigma_qrc(3)
    assert parse("A a0. A a1. A a2. E x. x^3 + a2*x^2 + a1*x + a0 = 0") not in sigma_qrc(1)


@pytest.mark.parametrize("bound", [0, 2, 4, -1])
def test_sigma_qrc_rejects_even_bound(bound):
    with pytest.raises(EvenBound):
        sigma_qrc(bound)


def test_branch_axioms_exclusive_and_exhaustive():
    acvf, rcvf = branch_axiom(Branch.ACVF), branch_axiom(Branch.RCVF)
    assert render(acvf) == "0 < -1" and render(rcvf) == "-1 < 0"
    for m in (M_R, M_A):
        values = {eval_qf(m, acvf, {}), eval_qf(m, rcvf, {})}
        assert values == {TruthValue.TRUE, TruthValue.FALSE}


@pytest.mark.parametrize("c, r", [(0, 0), (0, 2), (0, 3), (5, 5)])
def test_completion_config_valid(c, r):
    assert CompletionConfig(Branch.ACVF, c, r).residue_characteristic == r


@pytest.mark.parametrize("branch, c, r", [
    (Branch.RCVF, 0, 2), (Branch.ACVF, 2, 3), (Branch.ACVF, 0, 4), (Branch.ACVF, 2, 0),
])
def test_completion_config_invalid(branch, c, r):
    with pytest.raises(ValueError):
        CompletionConfig(branch, c, r)
