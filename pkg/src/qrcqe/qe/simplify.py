"""Light, branch-aware simplification of quantifier-free results."""
from __future__ import annotations

from ..formula import FALSE, TRUE, And, FalseF, Or, OrderAtom, Rho, TrueF, ValueAtom
from ..theory import Branch
from .atoms import canonical_atom, eq0, fold_ground, ne0, negate


def simplify(f, branch: Branch):
    """Fold ground atoms whose truth is completion independent, put atoms in
    canonical form, flatten, deduplicate and detect complementary literals."""
    if isinstance(f, (TrueF, FalseF)):
        return f
    if isinstance(f, (OrderAtom, ValueAtom)):
        a = canonical_atom(f, branch)
        t = _trivial_value(a)
        if t is not a:
            return simplify(t, branch)
        v = fold_ground(a, branch)
        if v is None:
            return a
        return TRUE if v else FALSE
    if isinstance(f, (And, Or)):
        is_and = isinstance(f, And)
        unit, zero = (TRUE, FALSE) if is_and else (FALSE, TRUE)
        out, seen = [], set()
        stack = [simplify(a, branch) for a in f.args]
        flat = []
        for a in stack:
            if isinstance(a, type(f)):
                flat.extend(a.args)
            else:
                flat.append(a)
        for a in flat:
            if a == unit:
                continue
            if a == zero:
                return zero
            if a in seen:
                continue
            seen.add(a)
            out.append(a)
        leaves = {a for a in out if isinstance(a, OrderAtom)}
        for a in leaves:
            n = negate(a)
            if isinstance(n, OrderAtom) and canonical_atom(n, branch) in leaves:
                return zero
        if not out:
            return unit
        # absorption: a | (a & b) is a, a & (a | b) is a
        lits = set(out)
        dual = Or if is_and else And
        out = [a for a in out if not (isinstance(a, dual) and lits.intersection(a.args))]
        return out[0] if len(out) == 1 else type(f)(tuple(out))
    raise TypeError(f"simplify expects a quantifier-free formula, got {f!r}")


def _trivial_value(a):
    """Value atoms with an infinite or repeated side."""
    if not isinstance(a, ValueAtom):
        return a
    p, q, rho = a.p, a.q, a.rho
    if p == q:
        return FALSE if rho is Rho.LT else TRUE
    if q.is_zero():
        # v(p) <= infinity always; v(p) < infinity iff p != 0; v(p) = infinity iff p = 0
        return {Rho.LE: TRUE, Rho.LT: ne0(p), Rho.EQ: eq0(p)}[rho]
    if p.is_zero():
        return {Rho.LE: eq0(q), Rho.LT: FALSE, Rho.EQ: eq0(q)}[rho]
    return a
