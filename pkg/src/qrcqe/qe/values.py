"""Symbolic values for ultrametric ball reasoning.

A :class:`Val` denotes ``v(n) - v(d) + k*eps`` where ``d`` is nonzero (the
caller guards it) and ``eps`` is an infinitesimal element of the value
group; with ``low`` set it denotes a value below every value built from the
parameters (the "far outside every ball" radius).  A literally zero ``n``
denotes infinity.  Comparisons produce quantifier-free formulas over value
atoms of products, so no division ever reaches the output.

At a point ``x`` with ``v(x - c) = delta`` chosen generically, every
``v(x - r)`` equals ``min(delta, v(c - r))``; the helpers here evaluate
linear forms that way.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..formula import FALSE, TRUE, Rho, ValueAtom, conj, disj
from ..poly import ONE, ZERO, Polynomial
from .atoms import eq0, ne0, vle, vlt


@dataclass(frozen=True)
class Val:
    n: Polynomial
    d: Polynomial = ONE
    k: int = 0
    low: bool = False

    @property
    def infinite(self) -> bool:
        return self.n.is_zero() and not self.low

    def shift(self, a: Polynomial) -> "Val":
        """``v(a) + self``."""
        return Val(a * self.n, self.d, self.k, self.low)

    def with_eps(self, k: int) -> "Val":
        return Val(self.n, self.d, k, self.low)


INFINITY = Val(ZERO)
LOW = Val(ONE, ONE, 0, True)


def le(a: Val, b: Val):
    """Formula for ``a <= b``."""
    if a.low != b.low:
        return TRUE if a.low else FALSE
    if b.infinite:
        return TRUE
    if a.infinite:
        return eq0(b.n)
    x, y = a.n * b.d, b.n * a.d
    if a.k <= b.k:
        return vle(x, y)
    return disj([vlt(x, y), conj([eq0(a.n), eq0(b.n)])])


def lt(a: Val, b: Val):
    """Formula for ``a < b``."""
    if a.low != b.low:
        return TRUE if a.low else FALSE
    if a.infinite:
        return FALSE
    if b.infinite:
        return ne0(a.n)
    x, y = a.n * b.d, b.n * a.d
    if a.k < b.k:
        return conj([vle(x, y), ne0(a.n)])
    return vlt(x, y)


def _prune(vals) -> list:
    finite = [v for v in vals if not v.infinite]
    return finite if finite else [INFINITY]


def min_le(xs, ys):
    """``min(xs) <= min(ys)``."""
    xs, ys = _prune(xs), _prune(ys)
    return conj(disj(le(x, y) for x in xs) for y in ys)


def min_lt(xs, ys):
    xs, ys = _prune(xs), _prune(ys)
    return conj(disj(lt(x, y) for x in xs) for y in ys)


def compare(xs, ys, rho: Rho):
    """``min(xs) rho min(ys)``."""
    if rho is Rho.LE:
        return min_le(xs, ys)
    if rho is Rho.LT:
        return min_lt(xs, ys)
    return conj([min_le(xs, ys), min_le(ys, xs)])


# -- linear forms around a center ------------------------------------------------

@dataclass(frozen=True)
class Linear:
    """``a*x + b`` with ``a``, ``b`` free of ``x``."""
    a: Polynomial
    b: Polynomial

    @classmethod
    def of(cls, p: Polynomial, var: str) -> "Linear":
        cs = p.coeff_list(var)
        cs = cs + [ZERO] * (2 - len(cs))
        return cls(cs[1], cs[0])


def center_distance(c: Linear, f: Linear) -> Val:
    """``v(r_c - r_f)`` for the roots ``r = -b/a`` (both ``a`` nonzero)."""
    return Val(c.a * f.b - f.a * c.b, c.a * f.a)


def form_value(f: Linear, c: Linear, delta: Val, nonzero: bool) -> list:
    """Entries whose minimum is ``v(f(x))`` at a generic ``x`` with
    ``v(x - r_c) = delta``; ``nonzero`` says whether ``f.a != 0``."""
    if not nonzero:
        return [Val(f.b)]
    # v(a) + min(delta, v(r_c - r_f)) and v(a) + v(r_c - r_f) = v(a_c b - a b_c) - v(a_c)
    return [delta.shift(f.a), Val(c.a * f.b - f.a * c.b, c.a)]


def ball_point_value_atom(atom: ValueAtom, var: str, tp):
    """Substitute a generic point of a ball (see :class:`BallPoint`) into a
    value atom whose sides are linear in ``var``."""
    from ..errors import TableMiss
    from .testpoints import Radius

    for side in (atom.p, atom.q):
        if side.degree(var) > 1:
            raise TableMiss("ball points substitute into linear value atoms only")
    center = Linear(tp.center.den, -tp.center.num)
    k = {Radius.EQUAL: 0, Radius.INSIDE: 1, Radius.OUTSIDE: -1}[tp.radius]
    delta = Val(tp.reference, ONE, k)
    sides = []
    for side in (atom.p, atom.q):
        f = Linear.of(side, var)
        sides.append(form_value(f, center, delta, not f.a.is_zero()))
    return compare(sides[0], sides[1], atom.rho)


__all__ = [
    "INFINITY", "LOW", "Linear", "Val", "ball_point_value_atom", "center_distance", "compare",
    "form_value", "le", "lt",
]
