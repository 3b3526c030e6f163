"""Polynomial-level atoms: construction, negation and branch-aware folding.

After normalization every leaf is an :class:`OrderAtom` ``p sigma 0`` or a
:class:`ValueAtom` ``v(p) rho v(q)``.  On the ACVF side the quasi-order is
the valuation order, so ``<=``/``<`` become value atoms and order atoms only
ever carry ``= 0`` and ``!= 0``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import QRCError
from ..formula import (
    FALSE, TRUE, And, Atom, FalseF, Not, Or, OrderAtom, Rel, Rho, Sigma, TrueF, ValueAtom,
    conj, disj, term_to_poly,
)
from ..poly import Polynomial
from ..theory import Branch


def eq0(p) -> OrderAtom:
    return OrderAtom(Polynomial.coerce(p), Sigma.EQ)


def ne0(p) -> OrderAtom:
    return OrderAtom(Polynomial.coerce(p), Sigma.NE)


def ge0(p) -> OrderAtom:
    return OrderAtom(Polynomial.coerce(p), Sigma.GE)


def gt0(p) -> OrderAtom:
    return OrderAtom(Polynomial.coerce(p), Sigma.GT)


def vle(p, q) -> ValueAtom:
    """``v(p) <= v(q)``."""
    return ValueAtom(Polynomial.coerce(p), Polynomial.coerce(q), Rho.LE)


def vlt(p, q) -> ValueAtom:
    return ValueAtom(Polynomial.coerce(p), Polynomial.coerce(q), Rho.LT)


def veq(p, q) -> ValueAtom:
    return ValueAtom(Polynomial.coerce(p), Polynomial.coerce(q), Rho.EQ)


def all_zero(ps) -> object:
    """Every polynomial in ``ps`` vanishes (literal zeros are skipped)."""
    return conj(eq0(p) for p in ps if not Polynomial.coerce(p).is_zero())


def some_nonzero(ps) -> object:
    return disj(ne0(p) for p in ps if not Polynomial.coerce(p).is_zero())


# -- surface -> polynomial level -------------------------------------------

def atomize(f, branch: Branch):
    """Turn a normalized formula over surface atoms into one over
    polynomial-level atoms (no negations remain)."""
    if isinstance(f, (TrueF, FalseF, OrderAtom, ValueAtom)):
        return f
    if isinstance(f, Atom):
        return _atomize_atom(f, branch, True)
    if isinstance(f, Not):
        if isinstance(f.arg, Atom):
            return _atomize_atom(f.arg, branch, False)
        return negate(atomize(f.arg, branch))
    if isinstance(f, And):
        return conj(atomize(a, branch) for a in f.args)
    if isinstance(f, Or):
        return disj(atomize(a, branch) for a in f.args)
    return type(f)(f.var, atomize(f.body, branch), pos=f.pos)


def _atomize_atom(a: Atom, branch: Branch, positive: bool):
    lp, rp = term_to_poly(a.left), term_to_poly(a.right)
    rel = a.rel
    if not positive:
        negated = {
            Rel.eq: Rel.neq, Rel.neq: Rel.eq,
            Rel.preceq: Rel.prec, Rel.prec: Rel.preceq,
            Rel.preceq_v: Rel.prec_v, Rel.prec_v: Rel.preceq_v,
        }
        if rel in (Rel.preceq, Rel.prec, Rel.preceq_v, Rel.prec_v):
            lp, rp = rp, lp
        if rel in negated:
            rel = negated[rel]
        else:
            weak = Rel.prec if rel is Rel.asymp else Rel.prec_v
            return disj([_atomize_atom(Atom(a.left, weak, a.right), branch, True),
                         _atomize_atom(Atom(a.right, weak, a.left), branch, True)])
    if rel is Rel.eq:
        return eq0(rp - lp)
    if rel is Rel.neq:
        return ne0(rp - lp)
    if rel in (Rel.asymp, Rel.asymp_v):
        weak = Rel.preceq if rel is Rel.asymp else Rel.preceq_v
        return conj([_atomize_atom(Atom(a.left, weak, a.right), branch, True),
                      _atomize_atom(Atom(a.right, weak, a.left), branch, True)])
    valued = rel in (Rel.preceq_v, Rel.prec_v) or branch is Branch.ACVF
    strict = rel in (Rel.prec, Rel.prec_v)
    if valued:
        # l <=v r  iff  v(r) <= v(l);  l <v r  iff  v(r) < v(l)
        return vlt(rp, lp) if strict else vle(rp, lp)
    return gt0(rp - lp) if strict else ge0(rp - lp)


def negate(f):
    """Negation pushed to polynomial-level atoms."""
    if isinstance(f, TrueF):
        return FALSE
    if isinstance(f, FalseF):
        return TRUE
    if isinstance(f, OrderAtom):
        s = f.sigma
        if s is Sigma.EQ:
            return ne0(f.p)
        if s is Sigma.NE:
            return eq0(f.p)
        if s is Sigma.GE:
            return gt0(-f.p)
        return ge0(-f.p)
    if isinstance(f, ValueAtom):
        if f.rho is Rho.LE:
            return vlt(f.q, f.p)
        if f.rho is Rho.LT:
            return vle(f.q, f.p)
        return disj([vlt(f.p, f.q), vlt(f.q, f.p)])
    if isinstance(f, And):
        return disj(negate(a) for a in f.args)
    if isinstance(f, Or):
        return conj(negate(a) for a in f.args)
    raise QRCError(f"cannot negate {f!r}")


# -- ground facts ------------------------------------------------------------

def _int_value(p: Polynomial):
    """Integer value of a constant polynomial with integral coefficient."""
    c = p.constant_value() if not p.is_zero() else 0
    c = Fraction(c)
    return c


def fold_ground(a, branch: Branch):
    """Truth of a ground atom when it is the same in every completion of the
    branch, else ``None``."""
    if isinstance(a, OrderAtom):
        if not a.p.is_constant() and not a.p.is_zero():
            return None
        c = _int_value(a.p)
        if branch is Branch.RCVF:
            return {Sigma.EQ: c == 0, Sigma.NE: c != 0, Sigma.GE: c >= 0, Sigma.GT: c > 0}[a.sigma]
        if c == 0:
            return a.sigma is Sigma.EQ if a.sigma in (Sigma.EQ, Sigma.NE) else None
        if abs(c) == 1 and a.sigma in (Sigma.EQ, Sigma.NE):
            return a.sigma is Sigma.NE
        return None
    if isinstance(a, ValueAtom):
        if not ((a.p.is_constant() or a.p.is_zero()) and (a.q.is_constant() or a.q.is_zero())):
            return None
        x, y = _int_value(a.p), _int_value(a.q)
        if branch is Branch.RCVF:
            vx = float("inf") if x == 0 else 0
            vy = float("inf") if y == 0 else 0
            return {Rho.LE: vx <= vy, Rho.LT: vx < vy, Rho.EQ: vx == vy}[a.rho]
        return _fold_acvf_values(x, y, a.rho)
    return None


def _divides(a: Fraction, b: Fraction) -> bool:
    """``v(a) <= v(b)`` in every completion, for integers ``a``, ``b``."""
    if b == 0:
        return True
    if a == 0:
        return False
    if a.denominator != 1 or b.denominator != 1:
        return False
    return b.numerator % a.numerator == 0


def _fold_acvf_values(x: Fraction, y: Fraction, rho: Rho):
    unit_x, unit_y = abs(x) == 1, abs(y) == 1
    if rho is Rho.LE:
        if _divides(x, y):
            return True
        if x == 0 and unit_y:
            return False
        return None
    if rho is Rho.LT:
        if _divides(y, x):
            return False
        if unit_x and y == 0:
            return True
        return None
    if _divides(x, y) and _divides(y, x):
        return True
    if (x == 0 and unit_y) or (y == 0 and unit_x):
        return False
    return None


# -- canonical atoms -------------------------------------------------------------

def _primitive(p: Polynomial) -> Polynomial:
    """Positive-content-free integer form of ``p``."""
    if p.is_zero():
        return p
    c = p.content()
    return p.scale(1 / c) if c != 1 else p


def _sign_canonical(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    lead = p.sorted_terms()[0][1]
    return -p if lead < 0 else p


def _integral(p: Polynomial) -> Polynomial:
    if p.is_zero() or p.is_integral():
        return p
    return p.scale(p.content().denominator)


def canonical_atom(a, branch: Branch):
    """Equivalent atom in a canonical form (never changes truth in any
    completion of ``branch``)."""
    if isinstance(a, OrderAtom):
        p = a.p
        if branch is Branch.RCVF:
            p = _primitive(p)
        else:
            p = _integral(p)
        if a.sigma in (Sigma.EQ, Sigma.NE):
            p = _sign_canonical(p)
        return OrderAtom(p, a.sigma)
    if isinstance(a, ValueAtom):
        p, q = a.p, a.q
        if branch is Branch.RCVF:
            p, q = _sign_canonical(_primitive(p)), _sign_canonical(_primitive(q))
        else:
            if not (p.is_integral() and q.is_integral()):
                d = 1
                for r in (p, q):
                    if not r.is_zero():
                        den = r.content().denominator
                        d = d * den // gcd(d, den)
                p, q = p.scale(d), q.scale(d)
            p, q = _sign_canonical(p), _sign_canonical(q)
        if a.rho is Rho.EQ and str(q) < str(p):
            p, q = q, p
        return ValueAtom(p, q, a.rho)
    return a
