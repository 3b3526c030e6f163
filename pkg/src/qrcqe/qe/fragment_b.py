"""Parametric gcd elimination for the algebraically closed branch.

The quantified variable occurs only in equations and disequations.  The
equations are merged into one polynomial of known exact degree by case
splits on leading coefficients and on principal subresultant coefficients;
then ``E x. f = 0 & G != 0`` holds exactly when ``f`` does not divide
``G^deg f``, i.e. when the pseudo-remainder has a nonzero coefficient.  All
steps are fraction free, so the conditions hold in every characteristic.
"""
from __future__ import annotations

from ..formula import conj, disj
from ..poly import ONE, Polynomial, prem, principal_coefficients, subresultant, x_power
from .atoms import all_zero, eq0, ne0, some_nonzero


def _truncate(p: Polynomial, var: str, k: int) -> Polynomial:
    cs = p.coeff_list(var)
    acc = cs[0] if cs else p
    for i in range(1, k + 1):
        acc = acc + cs[i] * x_power(var, i)
    return acc


def _degree_cases(p: Polynomial, var: str):
    """``(guard, truncation)`` for each exact degree ``k >= 1`` of ``p``."""
    cs = p.coeff_list(var)
    for k in range(len(cs) - 1, 0, -1):
        if cs[k].is_zero():
            continue
        yield conj([all_zero(cs[k + 1:]), ne0(cs[k])]), _truncate(p, var, k)


def exists_acf(var: str, eqs: list, neqs: list):
    """Quantifier-free equivalent of ``E var. AND(f = 0) & AND(g != 0)`` over
    algebraically closed fields."""
    if not eqs:
        return conj(some_nonzero(g.coeff_list(var)) for g in neqs)
    f, rest = eqs[0], eqs[1:]
    cases = [conj([all_zero(f.coeff_list(var)), exists_acf(var, rest, neqs)])]
    for guard, fk in _degree_cases(f, var):
        cases.append(conj([guard, _with_core(var, fk, rest, neqs)]))
    return disj(cases)


def _with_core(var, h, eqs, neqs):
    """``h`` has exact (guarded) degree >= 1."""
    if not eqs:
        return _final(var, h, neqs)
    g, rest = eqs[0], eqs[1:]
    cases = [conj([all_zero(g.coeff_list(var)), _with_core(var, h, rest, neqs)])]
    for guard, gm in _degree_cases(g, var):
        cases.append(conj([guard, _gcd_cases(var, h, gm, rest, neqs)]))
    return disj(cases)


def _gcd_cases(var, h, g, eqs, neqs):
    p, q = (h, g) if h.degree(var) >= g.degree(var) else (g, h)
    pscs = principal_coefficients(p, q, var)
    cases, zeros = [], []
    for j, psc in enumerate(pscs):
        # the gcd has degree j exactly when psc_0..psc_(j-1) vanish and psc_j does not
        if j >= 1:
            sj = subresultant(p, q, var, j)
            cases.append(conj(zeros + [ne0(psc), _with_core(var, sj, eqs, neqs)]))
        zeros.append(eq0(psc))
    cases.append(conj(zeros + [_with_core(var, q, eqs, neqs)]))
    return disj(cases)


def _final(var, f, neqs):
    k = f.degree(var)
    g = ONE
    for h in neqs:
        g = prem(g * prem(h, f, var), f, var)
    return some_nonzero(prem(g ** k, f, var).coeff_list(var))


__all__ = ["exists_acf"]
