"""First-order formulas over L = {+, *, -, <=, <=v, 0, 1}.

Terms are built from nonnegative integer constants, variables, ``Add``,
``Mul`` and ``Neg``; there is no division.  Formulas add the connectives,
the two quantifiers and the literals ``true``/``false``.  Besides the
surface :class:`Atom`, formula trees may carry the polynomial-level leaves
:class:`OrderAtom` and :class:`ValueAtom` used by the elimination engine.

Every node has an optional ``pos`` (source offset) that is ignored by
equality, so parsed and constructed trees compare structurally.
"""
from __future__ import annotations

import enum
import re
from math import lcm
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Union

from .poly import ONE, ZERO, Polynomial


def _pos():
    return field(default=None, compare=False, repr=False)


# -- terms --------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    value: int
    pos: int | None = _pos()

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError("constants are nonnegative integers; use Neg for negation")


@dataclass(frozen=True)
class Var:
    name: str
    pos: int | None = _pos()


@dataclass(frozen=True)
class Add:
    args: tuple
    pos: int | None = _pos()


@dataclass(frozen=True)
class Mul:
    args: tuple
    pos: int | None = _pos()


@dataclass(frozen=True)
class Neg:
    arg: "Term"
    pos: int | None = _pos()


Term = Union[Const, Var, Add, Mul, Neg]


def const(n: int) -> Term:
    return Neg(Const(-n)) if n < 0 else Const(n)


def term_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Const):
        return frozenset()
    if isinstance(t, Neg):
        return term_vars(t.arg)
    return frozenset().union(*(term_vars(a) for a in t.args))


def term_to_poly(t: Term) -> Polynomial:
    if isinstance(t, Const):
        return Polynomial.const(t.value)
    if isinstance(t, Var):
        return Polynomial.var(t.name)
    if isinstance(t, Neg):
        return -term_to_poly(t.arg)
    if isinstance(t, Add):
        acc = ZERO
        for a in t.args:
            acc = acc + term_to_poly(a)
        return acc
    acc = ONE
    for a in t.args:
        acc = acc * term_to_poly(a)
    return acc


def poly_to_term(p: Polynomial) -> Term:
    """L-term for an integer polynomial, terms in graded-lex order."""
    if not p.is_integral():
        raise ValueError(f"L-terms have integer coefficients only: {p}")
    if p.is_zero():
        return Const(0)
    summands = []
    for e, c in p.sorted_terms():
        factors = [Const(abs(c))] if abs(c) != 1 or not any(e) else []
        for v, k in zip(p.vars, e):
            factors.extend([Var(v)] * k)
        body = factors[0] if len(factors) == 1 else Mul(tuple(factors))
        summands.append(Neg(body) if c < 0 else body)
    return summands[0] if len(summands) == 1 else Add(tuple(summands))


# -- formulas -----------------------------------------------------------

class Rel(enum.Enum):
    eq = "="
    neq = "!="
    preceq = "<="
    prec = "<"
    asymp = "~"
    preceq_v = "<=v"
    prec_v = "<v"
    asymp_v = "~v"


@dataclass(frozen=True)
class TrueF:
    pos: int | None = _pos()


@dataclass(frozen=True)
class FalseF:
    pos: int | None = _pos()


@dataclass(frozen=True)
class Atom:
    left: Term
    rel: Rel
    right: Term
    pos: int | None = _pos()


@dataclass(frozen=True)
class Not:
    arg: "Formula"
    pos: int | None = _pos()


@dataclass(frozen=True)
class And:
    args: tuple
    pos: int | None = _pos()


@dataclass(frozen=True)
class Or:
    args: tuple
    pos: int | None = _pos()


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"
    pos: int | None = _pos()


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"
    pos: int | None = _pos()


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"
    pos: int | None = _pos()


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"
    pos: int | None = _pos()


class Sigma(enum.Enum):
    """Sign condition of an order atom ``p sigma 0``."""
    EQ = "= 0"
    NE = "!= 0"
    GE = ">= 0"
    GT = "> 0"


class Rho(enum.Enum):
    """Comparison of values in a value atom ``v(p) rho v(q)``."""
    LE = "<="
    LT = "<"
    EQ = "="


@dataclass(frozen=True)
class OrderAtom:
    """``p sigma 0`` where ``>=``/``>`` refer to the quasi-order."""
    p: Polynomial
    sigma: Sigma

    def __str__(self):
        return f"{self.p} {self.sigma.value}"


@dataclass(frozen=True)
class ValueAtom:
    """``v(p) rho v(q)``; ``t1 <=v t2`` is ``v(t2) <= v(t1)``."""
    p: Polynomial
    q: Polynomial
    rho: Rho

    def __str__(self):
        return f"v({self.p}) {self.rho.value} v({self.q})"


Formula = Union[TrueF, FalseF, Atom, Not, And, Or, Implies, Iff, Exists, Forall, OrderAtom, ValueAtom]
TRUE = TrueF()
FALSE = FalseF()
LEAVES = (TrueF, FalseF, Atom, OrderAtom, ValueAtom)
QUANTIFIERS = (Exists, Forall)


def conj(args: Iterable) -> "Formula":
    """Flattening conjunction with unit/zero simplification."""
    out = []
    for a in args:
        if isinstance(a, TrueF):
            continue
        if isinstance(a, FalseF):
            return FALSE
        if isinstance(a, And):
            out.extend(a.args)
        else:
            out.append(a)
    if not out:
        return TRUE
    return out[0] if len(out) == 1 else And(tuple(out))


def disj(args: Iterable) -> "Formula":
    out = []
    for a in args:
        if isinstance(a, FalseF):
            continue
        if isinstance(a, TrueF):
            return TRUE
        if isinstance(a, Or):
            out.extend(a.args)
        else:
            out.append(a)
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else Or(tuple(out))


def free_vars(f) -> frozenset:
    if isinstance(f, (TrueF, FalseF)):
        return frozenset()
    if isinstance(f, Atom):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, OrderAtom):
        return f.p.variables()
    if isinstance(f, ValueAtom):
        return f.p.variables() | f.q.variables()
    if isinstance(f, Not):
        return free_vars(f.arg)
    if isinstance(f, (And, Or)):
        return frozenset().union(*(free_vars(a) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_quantifier_free(f) -> bool:
    if isinstance(f, LEAVES):
        return True
    if isinstance(f, QUANTIFIERS):
        return False
    if isinstance(f, Not):
        return is_quantifier_free(f.arg)
    if isinstance(f, (And, Or)):
        return all(is_quantifier_free(a) for a in f.args)
    return is_quantifier_free(f.left) and is_quantifier_free(f.right)


def iter_leaves(f) -> Iterator:
    if isinstance(f, LEAVES):
        yield f
    elif isinstance(f, Not):
        yield from iter_leaves(f.arg)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            yield from iter_leaves(a)
    elif isinstance(f, (Implies, Iff)):
        yield from iter_leaves(f.left)
        yield from iter_leaves(f.right)
    else:
        yield from iter_leaves(f.body)


def count_atoms(f) -> int:
    return sum(1 for leaf in iter_leaves(f) if not isinstance(leaf, (TrueF, FalseF)))


def quantifier_depth(f) -> int:
    if isinstance(f, LEAVES):
        return 0
    if isinstance(f, QUANTIFIERS):
        return 1 + quantifier_depth(f.body)
    if isinstance(f, Not):
        return quantifier_depth(f.arg)
    if isinstance(f, (And, Or)):
        return max((quantifier_depth(a) for a in f.args), default=0)
    return max(quantifier_depth(f.left), quantifier_depth(f.right))


# -- rendering ------------------------------------------------------------

def _power_run(t: Mul):
    """``(base, n)`` when a product is ``n >= 2`` copies of one factor."""
    first = t.args[0]
    if len(t.args) >= 2 and all(a == first for a in t.args):
        return first, len(t.args)
    return None


def _base(t: Term) -> str:
    if isinstance(t, (Const, Var)):
        return render_term(t)
    return f"({render_term(t)})"


def _factor(t: Term) -> str:
    if isinstance(t, (Const, Var, Neg)):
        return render_term(t)
    return f"({render_term(t)})"


def _render_mul(t: Mul) -> str:
    parts = []
    args = list(t.args)
    i = 0
    while i < len(args):
        j = i
        while j + 1 < len(args) and args[j + 1] == args[i]:
            j += 1
        n = j - i + 1
        parts.append(_factor(args[i]) if n == 1 else f"{_base(args[i])}^{n}")
        i = j + 1
    return "*".join(parts)


def render_term(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Neg):
        a = t.arg
        if isinstance(a, (Const, Var, Neg)) or (isinstance(a, Mul) and _power_run(a)):
            return "-" + render_term(a)
        return f"-({render_term(a)})"
    if isinstance(t, Mul):
        return _render_mul(t)
    out = []
    for i, a in enumerate(t.args):
        if i == 0:
            out.append(f"({render_term(a)})" if isinstance(a, Add) else render_term(a))
        elif isinstance(a, Neg):
            inner = a.arg
            out.append(" - " + (f"({render_term(inner)})" if isinstance(inner, Add) else render_term(inner)))
        else:
            out.append(" + " + (f"({render_term(a)})" if isinstance(a, Add) else render_term(a)))
    return "".join(out)


def _surface(f):
    """Surface atom for polynomial-level leaves (rendering only)."""
    if isinstance(f, OrderAtom):
        return order_atom_to_surface(f)
    if isinstance(f, ValueAtom):
        return value_atom_to_surface(f)
    return f


def render(f) -> str:
    """Deterministic text that re-parses to the same tree."""
    f = _surface(f)
    if isinstance(f, TrueF):
        return "true"
    if isinstance(f, FalseF):
        return "false"
    if isinstance(f, Atom):
        return f"{render_term(f.left)} {f.rel.value} {render_term(f.right)}"
    if isinstance(f, Not):
        inner = _surface(f.arg)
        if isinstance(inner, Not):
            return "!" + render(inner)
        return f"!({render(inner)})"
    if isinstance(f, And):
        return " & ".join(_wrap(a, (And, Or, Implies, Iff) + QUANTIFIERS) for a in f.args)
    if isinstance(f, Or):
        return " | ".join(_wrap(a, (Or, Implies, Iff) + QUANTIFIERS) for a in f.args)
    if isinstance(f, (Implies, Iff)):
        op = " -> " if isinstance(f, Implies) else " <-> "
        binary = (And, Or, Implies, Iff) + QUANTIFIERS
        return _wrap(f.left, binary) + op + _wrap(f.right, binary)
    if isinstance(f, QUANTIFIERS):
        q = "E" if isinstance(f, Exists) else "A"
        return f"{q} {f.var}. " + _wrap(f.body, (Iff,))
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f, kinds) -> str:
    f = _surface(f)
    s = render(f)
    return f"({s})" if isinstance(f, kinds) else s


def __str_formula(self):
    return render(self)


for _cls in (TrueF, FalseF, Atom, Not, And, Or, Implies, Iff, Exists, Forall):
    _cls.__str__ = __str_formula


# -- polynomial-level atoms <-> surface atoms ---------------------------

def _split_signs(p: Polynomial):
    """``p = pos - neg`` with both parts having positive coefficients."""
    pos = Polynomial({e: c for e, c in p.terms.items() if c > 0}, p.vars)
    neg = Polynomial({e: -c for e, c in p.terms.items() if c < 0}, p.vars)
    return pos, neg


def integral(p: Polynomial) -> Polynomial:
    """Scale by a positive integer to clear denominators."""
    if p.is_integral():
        return p
    c = p.content()
    return p.scale(c.denominator)


def order_atom_to_surface(a: OrderAtom) -> Atom:
    p = integral(a.p)
    pos, neg = _split_signs(p)
    if a.sigma in (Sigma.GE, Sigma.GT):
        rel = Rel.preceq if a.sigma is Sigma.GE else Rel.prec
        return Atom(poly_to_term(neg), rel, poly_to_term(pos))
    rel = Rel.eq if a.sigma is Sigma.EQ else Rel.neq
    if neg.is_zero() or pos.is_zero():
        return Atom(poly_to_term(pos if neg.is_zero() else neg), rel, Const(0))
    return Atom(poly_to_term(pos), rel, poly_to_term(neg))


def _den(p: Polynomial) -> int:
    return p.content().denominator if not p.is_zero() else 1


def value_atom_to_surface(a: ValueAtom) -> Atom:
    p, q = a.p, a.q
    if not (p.is_integral() and q.is_integral()):
        # one positive integer factor on both sides keeps the comparison
        d = lcm(_den(p), _den(q))
        p, q = p.scale(d), q.scale(d)
    lp, lq = poly_to_term(p), poly_to_term(q)
    if a.rho is Rho.LE:
        return Atom(lq, Rel.preceq_v, lp)
    if a.rho is Rho.LT:
        return Atom(lq, Rel.prec_v, lp)
    return Atom(lp, Rel.asymp_v, lq)


def to_surface(f):
    """Replace polynomial-level leaves by surface atoms throughout."""
    if isinstance(f, (OrderAtom, ValueAtom)):
        return _surface(f)
    if isinstance(f, (TrueF, FalseF, Atom)):
        return f
    if isinstance(f, Not):
        return Not(to_surface(f.arg))
    if isinstance(f, And):
        return And(tuple(to_surface(a) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(to_surface(a) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return type(f)(to_surface(f.left), to_surface(f.right))
    return type(f)(f.var, to_surface(f.body))


# -- normalization ------------------------------------------------------

_SUFFIX = re.compile(r"^(.*)\$(\d+)$")


def _rename_term(t: Term, mapping: dict) -> Term:
    if isinstance(t, Var):
        return Var(mapping[t.name], pos=t.pos) if t.name in mapping else t
    if isinstance(t, Const):
        return t
    if isinstance(t, Neg):
        return Neg(_rename_term(t.arg, mapping), pos=t.pos)
    return type(t)(tuple(_rename_term(a, mapping) for a in t.args), pos=t.pos)


def rename_free(f, mapping: dict):
    """Rename free variables (capture is the caller's concern)."""
    if not mapping:
        return f
    if isinstance(f, (TrueF, FalseF)):
        return f
    if isinstance(f, Atom):
        return replace(f, left=_rename_term(f.left, mapping), right=_rename_term(f.right, mapping))
    if isinstance(f, (OrderAtom, ValueAtom)):
        return _rename_poly_atom(f, mapping)
    if isinstance(f, Not):
        return replace(f, arg=rename_free(f.arg, mapping))
    if isinstance(f, (And, Or)):
        return replace(f, args=tuple(rename_free(a, mapping) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return replace(f, left=rename_free(f.left, mapping), right=rename_free(f.right, mapping))
    inner = {k: v for k, v in mapping.items() if k != f.var}
    return replace(f, body=rename_free(f.body, inner))


def _rename_poly(p: Polynomial, mapping: dict) -> Polynomial:
    if not any(v in mapping for v in p.vars):
        return p
    return Polynomial(p.terms, tuple(mapping.get(v, v) for v in p.vars))


def _rename_poly_atom(a, mapping):
    if isinstance(a, OrderAtom):
        return OrderAtom(_rename_poly(a.p, mapping), a.sigma)
    return ValueAtom(_rename_poly(a.p, mapping), _rename_poly(a.q, mapping), a.rho)


def alpha_rename(f):
    """Give every binder a distinct name, also distinct from free variables.

    The first binder of a name keeps it; later clashing binders become
    ``name$k`` with the least unused ``k``.  Already-distinct formulas are
    returned unchanged, which makes the pass idempotent.
    """
    used = set(_all_names(f))
    taken = set(free_vars(f))

    def fresh(name):
        m = _SUFFIX.match(name)
        base = m.group(1) if m else name
        k = 1
        while f"{base}${k}" in used:
            k += 1
        new = f"{base}${k}"
        used.add(new)
        return new

    def walk(g, mapping):
        if isinstance(g, (TrueF, FalseF, Atom, OrderAtom, ValueAtom)):
            return rename_free(g, mapping)
        if isinstance(g, Not):
            return replace(g, arg=walk(g.arg, mapping))
        if isinstance(g, (And, Or)):
            return replace(g, args=tuple(walk(a, mapping) for a in g.args))
        if isinstance(g, (Implies, Iff)):
            return replace(g, left=walk(g.left, mapping), right=walk(g.right, mapping))
        var = g.var
        if var in taken:
            new = fresh(var)
            mapping = {**mapping, var: new}
            var = new
        else:
            mapping = {k: v for k, v in mapping.items() if k != var}
        taken.add(var)
        return replace(g, var=var, body=walk(g.body, mapping))

    return walk(f, {})


def _all_names(f) -> Iterator[str]:
    yield from free_vars(f)
    if isinstance(f, QUANTIFIERS):
        yield f.var
        yield from _all_names(f.body)
    elif isinstance(f, Not):
        yield from _all_names(f.arg)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            yield from _all_names(a)
    elif isinstance(f, (Implies, Iff)):
        yield from _all_names(f.left)
        yield from _all_names(f.right)


_NEGATED_STRICT = {
    Rel.preceq: Rel.prec, Rel.prec: Rel.preceq,
    Rel.preceq_v: Rel.prec_v, Rel.prec_v: Rel.preceq_v,
}


def _flat(cls, parts):
    """Flattened ``And``/``Or`` that keeps ``true``/``false`` children, so
    no free variable is lost."""
    out = []
    for a in parts:
        out.extend(a.args if isinstance(a, cls) else (a,))
    return out[0] if len(out) == 1 else cls(tuple(out))


def _nnf(f, positive: bool):
    if isinstance(f, TrueF):
        return TRUE if positive else FALSE
    if isinstance(f, FalseF):
        return FALSE if positive else TRUE
    if isinstance(f, Atom):
        return _nnf_atom(f, positive)
    if isinstance(f, (OrderAtom, ValueAtom)):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    if isinstance(f, And):
        parts = [_nnf(a, positive) for a in f.args]
        return _flat(And, parts) if positive else _flat(Or, parts)
    if isinstance(f, Or):
        parts = [_nnf(a, positive) for a in f.args]
        return _flat(Or, parts) if positive else _flat(And, parts)
    if isinstance(f, Implies):
        if positive:
            return _flat(Or, [_nnf(f.left, False), _nnf(f.right, True)])
        return _flat(And, [_nnf(f.left, True), _nnf(f.right, False)])
    if isinstance(f, Iff):
        a, na = _nnf(f.left, True), _nnf(f.left, False)
        b, nb = _nnf(f.right, True), _nnf(f.right, False)
        if positive:
            return _flat(And, [_flat(Or, [na, b]), _flat(Or, [a, nb])])
        return _flat(Or, [_flat(And, [a, nb]), _flat(And, [na, b])])
    body_pos = _nnf(f.body, positive)
    if isinstance(f, Exists):
        return Exists(f.var, body_pos, pos=f.pos) if positive else Forall(f.var, body_pos, pos=f.pos)
    return Forall(f.var, body_pos, pos=f.pos) if positive else Exists(f.var, body_pos, pos=f.pos)


def _nnf_atom(a: Atom, positive: bool):
    l, r, rel = a.left, a.right, a.rel
    if rel is Rel.eq:
        return a if positive else Not(a)
    if rel is Rel.neq:
        eq = Atom(l, Rel.eq, r, pos=a.pos)
        return Not(eq) if positive else eq
    if rel in (Rel.preceq, Rel.prec, Rel.preceq_v, Rel.prec_v):
        if positive:
            return a
        return Atom(r, _NEGATED_STRICT[rel], l, pos=a.pos)
    weak = Rel.preceq if rel is Rel.asymp else Rel.preceq_v
    both = And((Atom(l, weak, r, pos=a.pos), Atom(r, weak, l, pos=a.pos)))
    return both if positive else _nnf(both, False)


def normalize(f):
    """Negation-normal form over ``{=, <=, <, <=v, <v}`` with negation only on
    equations; implications and biconditionals eliminated; binders made
    distinct.  Idempotent and free-variable preserving."""
    return alpha_rename(_nnf(f, True))
