"""Axiom sets for quasi-ordered and quasi-real closed valued fields."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EvenBound
from .parser import parse


class TheoryId(enum.Enum):
    SigmaQO = "qo"
    SigmaQRC = "qrc"


class Branch(enum.Enum):
    RCVF = "rcvf"
    ACVF = "acvf"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class CompletionConfig:
    """Branch plus (characteristic, residue characteristic).

    RCVF forces ``(0, 0)``; ACVF allows ``(0, 0)``, ``(0, p)`` and ``(p, p)``.
    """

    branch: Branch
    characteristic: int = 0
    residue_characteristic: int = 0

    def __post_init__(self):
        c, r = self.characteristic, self.residue_characteristic
        if self.branch is Branch.RCVF:
            if (c, r) != (0, 0):
                raise ValueError("real closed valued fields have characteristic (0, 0)")
            return
        if c == 0 and r == 0:
            return
        if not _is_prime(r):
            raise ValueError(f"residue characteristic must be 0 or prime, got {r}")
        if c not in (0, r):
            raise ValueError("characteristic must be 0 or equal to the residue characteristic")


FIELD_AXIOMS = (
    "A x. A y. A z. (x + y) + z = x + (y + z)",
    "A x. A y. x + y = y + x",
    "A x. x + 0 = x",
    "A x. x + -x = 0",
    "A x. A y. A z. (x*y)*z = x*(y*z)",
    "A x. A y. x*y = y*x",
    "A x. x*1 = x",
    "A x. A y. A z. x*(y + z) = x*y + x*z",
    "!(0 = 1)",
    "A x. x != 0 -> (E y. x*y = 1)",
)


def quasi_order_axioms(rel: str) -> tuple:
    """Totality, reflexivity, transitivity and (Q0)-(Q2) for ``<=`` or ``<=v``."""
    asymp = "~" if rel == "<=" else "~v"
    return (
        f"A x. x {rel} x",
        f"A x. A y. A z. (x {rel} y & y {rel} z) -> x {rel} z",
        f"A x. A y. x {rel} y | y {rel} x",
        f"A x. x {asymp} 0 -> x = 0",
        f"A x. A y. A z. (x {rel} y & 0 {rel} z) -> x*z {rel} y*z",
        f"A x. A y. A z. (x {rel} y & !(z {asymp} y)) -> x + z {rel} y + z",
    )


NONTRIVIAL_V = "E x. x != 0 & !(x ~v 1)"
PHI1 = "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))"
PHI2 = "-1 < 0 -> (A x. A y. (0 <= x & x <= y) -> x <=v y)"
SQUARE_ROOT = "A x. 0 <= x -> (E y. y*y = x)"


def _dedupe(texts) -> tuple:
    out, seen = [], set()
    for t in texts:
        f = parse(t)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(out)


def sigma_qo_text() -> tuple:
    return (FIELD_AXIOMS + quasi_order_axioms("<=") + quasi_order_axioms("<=v")
            + (NONTRIVIAL_V, PHI1, PHI2))


def sigma_qo() -> tuple:
    """Quasi-ordered fields with a non-trivial compatible valuation."""
    return _dedupe(sigma_qo_text())


def odd_degree_root_text(d: int) -> str:
    coeffs = [f"a{i}" for i in range(d)]
    monomials = ["x" if d == 1 else f"x^{d}"]
    for i in range(d - 1, 0, -1):
        monomials.append(f"a{i}*x" if i == 1 else f"a{i}*x^{i}")
    monomials.append("a0")
    prefix = "".join(f"A {c}. " for c in coeffs)
    return f"{prefix}E x. {' + '.join(monomials)} = 0"


def sigma_qrc(odd_degree_bound: int = 3) -> tuple:
    """``sigma_qo()`` plus the square-root axiom and monic odd-degree root
    axioms for every odd degree up to ``odd_degree_bound``."""
    if odd_degree_bound < 1 or odd_degree_bound % 2 == 0:
        raise EvenBound(f"odd-degree bound must be an odd positive integer, got {odd_degree_bound}")
    extra = [SQUARE_ROOT] + [odd_degree_root_text(d) for d in range(1, odd_degree_bound + 1, 2)]
    return _dedupe(sigma_qo_text() + tuple(extra))


def branch_axiom(b: Branch):
    return parse("0 < -1" if b is Branch.ACVF else "-1 < 0")
