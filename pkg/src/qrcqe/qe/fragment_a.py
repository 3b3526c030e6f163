"""Order virtual substitution for the real closed branch.

The quantified variable occurs only in order atoms of degree at most two.
With an equation available its roots are the only candidates (Gauss
elimination); otherwise the candidates are the left end of the line, the
roots of the weak atoms and the points just right of the roots of the
strict atoms.
"""
from __future__ import annotations

from ..formula import TRUE, Sigma, conj, disj
from ..poly import ZERO
from .atoms import all_zero, eq0, ge0, ne0
from .testpoints import (
    EpsilonAbove, FiniteTerm, MinusInfinity, RootExpression, substitute_virtual,
)


def _coeffs(p, var):
    cs = p.coeff_list(var)
    return cs + [ZERO] * (3 - len(cs))


def roots(p, var: str) -> list:
    """``(test point, guard)`` for every symbolic root of ``p`` in ``var``."""
    a0, a1, a2 = _coeffs(p, var)
    deg = p.degree(var)
    if deg == 1:
        return [(FiniteTerm(-a0, a1), ne0(a1))]
    if deg == 2:
        quad = RootExpression(a2, a1, a0, 1)
        guard = conj([ne0(a2), ge0(quad.discriminant)])
        out = [(quad, guard), (RootExpression(a2, a1, a0, -1), guard)]
        if not a1.is_zero():
            out.insert(0, (FiniteTerm(-a0, a1), conj([eq0(a2), ne0(a1)])))
        return out
    return []


def _substitute_all(atoms, var, tp):
    return conj(substitute_virtual(a, var, tp) for a in atoms)


def exists_order(var: str, atoms: list):
    """Quantifier-free equivalent of ``E var. AND(atoms)`` over real closed
    fields; every atom is an :class:`OrderAtom` containing ``var``."""
    if not atoms:
        return TRUE
    eqs = [a for a in atoms if a.sigma is Sigma.EQ]
    if eqs:
        pivot = min(eqs, key=lambda a: a.p.degree(var))
        others = [a for a in atoms if a is not pivot]
        cases = [conj([all_zero(pivot.p.coeff_list(var)), exists_order(var, others)])]
        for tp, guard in roots(pivot.p, var):
            cases.append(conj([guard, _substitute_all(others, var, tp)]))
        return disj(cases)
    points = {MinusInfinity(): TRUE}
    for a in atoms:
        for tp, guard in roots(a.p, var):
            points.setdefault(tp if a.sigma is Sigma.GE else EpsilonAbove(tp), guard)
    return disj(conj([guard, _substitute_all(atoms, var, tp)]) for tp, guard in points.items())


__all__ = ["exists_order", "roots"]
