"""Virtual-substitution test points and substitution tables.

A root expression stands for ``(alpha + beta * sqrt(delta)) / gamma`` with
``gamma != 0`` and ``delta >= 0`` guarded by the caller.  Substituting it into
``q(x) = A2 x^2 + A1 x + A0`` and multiplying by ``gamma^2 > 0`` gives
``P + Q sqrt(delta)`` with polynomial ``P``, ``Q``, whose sign is expressed
through ``P``, ``Q`` and ``D = P^2 - Q^2 delta``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..errors import TableMiss
from ..formula import FALSE, TRUE, OrderAtom, Sigma, ValueAtom, conj, disj
from ..poly import ONE, ZERO, Polynomial
from .atoms import all_zero, eq0, ge0, gt0, ne0, some_nonzero, veq, vle, vlt


# -- test point kinds --------------------------------------------------------

@dataclass(frozen=True)
class FiniteTerm:
    """``num / den`` with guard ``den != 0``."""
    num: Polynomial
    den: Polynomial = ONE

    @property
    def guard(self):
        return TRUE if self.den == ONE else ne0(self.den)


@dataclass(frozen=True)
class PlusInfinity:
    guard: object = TRUE


@dataclass(frozen=True)
class MinusInfinity:
    guard: object = TRUE


@dataclass(frozen=True)
class RootExpression:
    """Root ``(-b + sign*sqrt(b^2 - 4ac)) / (2a)`` of ``a x^2 + b x + c``."""
    a: Polynomial
    b: Polynomial
    c: Polynomial
    sign: int = 1

    @property
    def discriminant(self) -> Polynomial:
        return self.b * self.b - self.a * self.c * 4

    @property
    def guard(self):
        return conj([ne0(self.a), ge0(self.discriminant)])


@dataclass(frozen=True)
class EpsilonAbove:
    base: object

    @property
    def guard(self):
        return self.base.guard


@dataclass(frozen=True)
class EpsilonBelow:
    base: object

    @property
    def guard(self):
        return self.base.guard


class Radius(enum.Enum):
    EQUAL = "equal-to"
    INSIDE = "strictly-inside"
    OUTSIDE = "strictly-outside"


@dataclass(frozen=True)
class BallPoint:
    """A generic ``x`` with ``v(x - center) R v(reference)`` where ``R`` is
    ``=``, ``>`` (inside) or ``<`` (outside), avoiding the ``avoid`` centers
    beyond what the radius forces."""
    center: FiniteTerm
    radius: Radius
    reference: Polynomial
    avoid: tuple = field(default=())

    @property
    def guard(self):
        return conj([self.center.guard, ne0(self.reference)])


TestPoint = (FiniteTerm, PlusInfinity, MinusInfinity, RootExpression, EpsilonAbove,
             EpsilonBelow, BallPoint)


# -- root expressions ----------------------------------------------------------

@dataclass(frozen=True)
class _Root:
    alpha: Polynomial
    beta: int          # 0 (rational point), +1 or -1
    delta: Polynomial
    gamma: Polynomial


def root_of(tp) -> _Root:
    if isinstance(tp, FiniteTerm):
        return _Root(tp.num, 0, ZERO, tp.den)
    if isinstance(tp, RootExpression):
        return _Root(-tp.b, tp.sign, tp.discriminant, tp.a * 2)
    raise TableMiss(f"no root expression for {tp!r}")


def _coeffs(p: Polynomial, var: str, max_degree: int = 2) -> list:
    cs = p.coeff_list(var)
    if len(cs) - 1 > max_degree:
        raise TableMiss(f"degree {len(cs) - 1} in {var} exceeds the substitution table")
    return cs + [ZERO] * (3 - len(cs))


def _pq(cs: list, r: _Root):
    """``gamma^2 q(root) = P + Q sqrt(delta)``."""
    a2, a1, a0 = cs[2], cs[1], cs[0]
    al, g = r.alpha, r.gamma
    if r.beta == 0:
        return a2 * al * al + a1 * al * g + a0 * g * g, ZERO
    b = r.beta
    p = a2 * (al * al + r.delta) + a1 * al * g + a0 * g * g
    q = (a2 * al * 2 + a1 * g).scale(b)
    return p, q


def _sign_formula(p: Polynomial, q: Polynomial, delta: Polynomial, sigma: Sigma):
    """``P + Q sqrt(delta) sigma 0`` given ``delta >= 0``."""
    if q.is_zero():
        return OrderAtom(p, sigma)
    d = p * p - q * q * delta
    if sigma is Sigma.EQ:
        return conj([ge0(-(p * q)), eq0(d)])
    if sigma is Sigma.NE:
        return disj([gt0(p * q), ne0(d)])
    if sigma is Sigma.GT:
        return disj([conj([gt0(p), disj([gt0(d), gt0(q)])]), conj([gt0(q), gt0(-d)])])
    return disj([conj([ge0(p), disj([ge0(q), ge0(d)])]), conj([ge0(q), ge0(-d)])])


def substitute_root(cs: list, r: _Root, sigma: Sigma):
    p, q = _pq(cs, r)
    return _sign_formula(p, q, r.delta, sigma)


def _derivative_coeffs(cs: list) -> list:
    return [cs[1], cs[2] * 2, ZERO]


def substitute_epsilon(cs: list, r: _Root, sigma: Sigma, above: bool = True):
    """``q(root +- eps) sigma 0``: the first nonzero of ``q, q', q''`` at the
    root decides (with alternating signs below the root)."""
    if sigma is Sigma.EQ:
        return all_zero(cs)
    if sigma is Sigma.NE:
        return some_nonzero(cs)
    d1 = _derivative_coeffs(cs)
    d2 = [cs[2] * 2, ZERO, ZERO]
    s1 = 1 if above else -1
    pos = disj([
        substitute_root(cs, r, Sigma.GT),
        conj([
            substitute_root(cs, r, Sigma.EQ),
            disj([
                substitute_root([c.scale(s1) for c in d1], r, Sigma.GT),
                conj([substitute_root(d1, r, Sigma.EQ), gt0(d2[0])]),
            ]),
        ]),
    ])
    if sigma is Sigma.GT:
        return pos
    return disj([pos, all_zero(cs)])


def substitute_infinity(cs: list, sigma: Sigma, positive: bool):
    """``q(+-inf) sigma 0`` from the highest nonzero coefficient."""
    if sigma is Sigma.EQ:
        return all_zero(cs)
    if sigma is Sigma.NE:
        return some_nonzero(cs)
    cases = []
    for i in (2, 1, 0):
        higher = all_zero(cs[i + 1:])
        c = cs[i] if (positive or i % 2 == 0) else -cs[i]
        cases.append(conj([higher, gt0(c)]))
    pos = disj(cases)
    return pos if sigma is Sigma.GT else disj([pos, all_zero(cs)])


# -- public entry point ----------------------------------------------------------

def substitute_virtual(a, var: str, tp):
    """Quantifier-free condition equivalent to ``a[var := tp]`` (under the
    test point's guard, which the caller conjoins)."""
    if isinstance(a, OrderAtom):
        if var not in a.p.variables():
            return a
        cs = _coeffs(a.p, var)
        if isinstance(tp, (FiniteTerm, RootExpression)):
            return substitute_root(cs, root_of(tp), a.sigma)
        if isinstance(tp, PlusInfinity):
            return substitute_infinity(cs, a.sigma, True)
        if isinstance(tp, MinusInfinity):
            return substitute_infinity(cs, a.sigma, False)
        if isinstance(tp, EpsilonAbove) and isinstance(tp.base, (FiniteTerm, RootExpression)):
            return substitute_epsilon(cs, root_of(tp.base), a.sigma, True)
        if isinstance(tp, EpsilonBelow) and isinstance(tp.base, (FiniteTerm, RootExpression)):
            return substitute_epsilon(cs, root_of(tp.base), a.sigma, False)
        if isinstance(tp, BallPoint) and a.sigma in (Sigma.EQ, Sigma.NE):
            return _ball_order(a, var, tp)
        raise TableMiss(f"no rule for {type(tp).__name__} in an order atom")
    if isinstance(a, ValueAtom):
        if var not in (a.p.variables() | a.q.variables()):
            return a
        if isinstance(tp, FiniteTerm):
            return _finite_value(a, var, tp)
        if isinstance(tp, BallPoint):
            return _ball_value(a, var, tp)
        raise TableMiss(f"no rule for {type(tp).__name__} in a value atom")
    raise TableMiss(f"not a normalized atom: {a!r}")


def _clear(p: Polynomial, var: str, tp: FiniteTerm):
    """``den^deg * p(num/den)`` and ``den^deg`` (deg = degree of p in var)."""
    cs = p.coeff_list(var)
    d = len(cs) - 1
    acc = ZERO
    for k, c in enumerate(cs):
        acc = acc + c * tp.num ** k * tp.den ** (d - k)
    return acc, tp.den ** max(d, 0)


def _finite_value(a: ValueAtom, var: str, tp: FiniteTerm):
    # v(p(r)) = v(P) - v(Dp) with P, Dp cleared; compare crosswise
    pn, pd = _clear(a.p, var, tp)
    qn, qd = _clear(a.q, var, tp)
    return ValueAtom(pn * qd, qn * pd, a.rho)


def _ball_order(a: OrderAtom, var: str, tp: BallPoint):
    # a generic ball point is never a root of a polynomial that is not zero
    # identically in var, except through the zero radius handled by guards
    cs = a.p.coeff_list(var)
    if a.sigma is Sigma.EQ:
        return all_zero(cs)
    return some_nonzero(cs)


def _ball_value(a: ValueAtom, var: str, tp: BallPoint):
    """Linear sides only: ``v(alpha x + beta) = v(alpha) + v(x - r)`` with
    ``v(x - r) = min(v(x - c), v(c - r))`` at a generic point of the ball."""
    from .values import ball_point_value_atom
    return ball_point_value_atom(a, var, tp)


__all__ = [
    "BallPoint", "EpsilonAbove", "EpsilonBelow", "FiniteTerm", "MinusInfinity", "PlusInfinity",
    "Radius", "RootExpression", "TestPoint", "substitute_epsilon", "substitute_infinity",
    "substitute_root", "substitute_virtual", "veq", "vle", "vlt", "FALSE",
]
