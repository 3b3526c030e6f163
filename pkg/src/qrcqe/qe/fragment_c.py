"""Ball-point elimination for linear value atoms in the algebraically closed
branch.

Every atom containing ``x`` is linear in it.  After a case split on which
``x``-coefficients vanish, an equation with a nonzero coefficient pins
``x`` to its root.  Otherwise ``x`` is described by a center ``c`` (a root
of a linear form in a value atom) and the radius ``delta = v(x - c)``; a
generic such ``x`` has ``v(x - r) = min(delta, v(c - r))`` for every other
root ``r`` and avoids any finite set of points.  Truth then depends on
``delta`` only through finitely many thresholds, so ``delta`` ranges over
infinity, a value below everything, each threshold and a value just above
each threshold (the value group is divisible).
"""
from __future__ import annotations

from itertools import product

from ..formula import FALSE, TRUE, OrderAtom, Sigma, ValueAtom, conj, disj
from ..poly import Polynomial
from .atoms import _sign_canonical, eq0, ne0
from .simplify import simplify
from .testpoints import FiniteTerm, substitute_virtual
from .values import INFINITY, LOW, Linear, Val, center_distance, compare, form_value


def _coefficient_keys(var, order_atoms, value_atoms) -> list:
    keys = {}
    for a in order_atoms:
        c = a.p.coeff(var, 1)
        keys.setdefault(_sign_canonical(c), None)
    for a in value_atoms:
        for side in (a.p, a.q):
            if var in side.variables():
                keys.setdefault(_sign_canonical(side.coeff(var, 1)), None)
    return list(keys)


def exists_linear_values(var: str, order_atoms: list, value_atoms: list, branch):
    """Quantifier-free equivalent of ``E var. AND(atoms)``; order atoms are
    equations or disequations, and all atoms are linear in ``var``."""
    keys = _coefficient_keys(var, order_atoms, value_atoms)
    cases = []
    for choice in product((False, True), repeat=len(keys)):
        nonzero = {k for k, nz in zip(keys, choice) if nz}
        guard = conj(ne0(k) if k in nonzero else eq0(k) for k in keys)
        guard = simplify(guard, branch)
        if guard == FALSE:
            continue
        body = _split_case(var, order_atoms, value_atoms, nonzero)
        cases.append(conj([guard, body]))
    return disj(cases)


def _nz(a: Polynomial, nonzero: set) -> bool:
    return _sign_canonical(a) in nonzero


def _split_case(var, order_atoms, value_atoms, nonzero):
    atoms = list(order_atoms) + list(value_atoms)
    for a in order_atoms:
        f = Linear.of(a.p, var)
        if a.sigma is Sigma.EQ and _nz(f.a, nonzero):
            tp = FiniteTerm(-f.b, f.a)
            return conj(substitute_virtual(b, var, tp) for b in atoms)
    fixed = []
    for a in order_atoms:
        f = Linear.of(a.p, var)
        if not _nz(f.a, nonzero):
            fixed.append(OrderAtom(f.b, a.sigma))
    centers = []
    for a in value_atoms:
        for side in (a.p, a.q):
            f = Linear.of(side, var)
            if _nz(f.a, nonzero) and f not in centers:
                centers.append(f)
    avoid = [Linear.of(a.p, var) for a in order_atoms
             if a.sigma is Sigma.NE and _nz(Linear.of(a.p, var).a, nonzero)]
    if not centers:
        # only the x-free parts of the value atoms remain; x avoids finitely many points
        rest = [ValueAtom(Linear.of(a.p, var).b, Linear.of(a.q, var).b, a.rho) for a in value_atoms]
        return conj(fixed + rest)
    cases = []
    for c in centers:
        for delta, guard in _radii(c, centers, value_atoms, var, nonzero):
            parts = [guard]
            for a in value_atoms:
                fp, fq = Linear.of(a.p, var), Linear.of(a.q, var)
                parts.append(compare(form_value(fp, c, delta, _nz(fp.a, nonzero)),
                                     form_value(fq, c, delta, _nz(fq.a, nonzero)), a.rho))
            for f in avoid:
                # x = c only at infinite radius
                if delta.low:
                    continue
                parts.append(disj([ne0(delta.n), ne0(c.a * f.b - f.a * c.b)]))
            cases.append(conj(parts))
    return conj(fixed + [disj(cases)])


def _radii(c: Linear, centers, value_atoms, var, nonzero) -> list:
    thresholds = []

    def add(v: Val):
        if not v.infinite and v not in thresholds:
            thresholds.append(v)

    for f in centers:
        add(center_distance(c, f))
    for a in value_atoms:
        sides = [Linear.of(a.p, var), Linear.of(a.q, var)]
        for i, j in ((0, 1), (1, 0)):
            f, g = sides[i], sides[j]
            if not _nz(f.a, nonzero):
                continue
            # v(a_f) + delta meets a delta-free entry of the other side
            for e in form_value(g, c, INFINITY, _nz(g.a, nonzero)):
                if not e.infinite:
                    add(Val(e.n, e.d * f.a))
    out = [(INFINITY, TRUE), (LOW, TRUE)]
    for t in thresholds:
        out.append((t, TRUE))
        out.append((t.with_eps(1), ne0(t.n)))
    return out


__all__ = ["exists_linear_values"]
