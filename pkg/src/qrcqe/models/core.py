"""The two built-in quasi-ordered valued fields and three-valued evaluation.

``M_R`` is Q(t) ordered with ``t`` a positive infinitesimal, carrying the
t-adic valuation, which is compatible with that order.  ``M_A`` is the field
of Laurent series over Q in which both ``<=`` and ``<=v`` are induced by the
t-adic valuation.  Evaluation is compiled to closures so that large
conformance runs stay fast.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .. import dense
from ..errors import MissingAssignment
from ..formula import (
    Add, And, Atom, Const, Exists, FalseF, Iff, Implies, Mul, Neg, Not,
    Or, OrderAtom, Rel, Rho, Sigma, TrueF, ValueAtom, Var, free_vars,
)
from .laurent import DEFAULT_PRECISION, INF, LaurentElem
from .ratfunc import RatFuncElem


class ModelTag(enum.Enum):
    M_R = "mr"
    M_A = "ma"


@dataclass(frozen=True)
class ModelDescriptor:
    tag: ModelTag
    precision: int = DEFAULT_PRECISION

    @property
    def name(self) -> str:
        return self.tag.name

    def with_precision(self, precision: int) -> "ModelDescriptor":
        return ModelDescriptor(self.tag, precision)

    def t(self):
        return RatFuncElem.t() if self.tag is ModelTag.M_R else LaurentElem.t()

    def element(self, x):
        """Coerce an integer, Fraction or model element into this model."""
        if self.tag is ModelTag.M_R:
            return RatFuncElem.coerce(x)
        return LaurentElem.coerce(x)


M_R = ModelDescriptor(ModelTag.M_R)
M_A = ModelDescriptor(ModelTag.M_A)


def model_by_name(name: str) -> ModelDescriptor:
    key = name.lower().replace("_", "")
    if key == "mr":
        return M_R
    if key == "ma":
        return M_A
    raise ValueError(f"unknown model {name!r}; expected mr or ma")


class TruthValue(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"

    @classmethod
    def of(cls, b) -> "TruthValue":
        if b is None:
            return cls.INDETERMINATE
        return cls.TRUE if b else cls.FALSE

    @property
    def determinate(self) -> bool:
        return self is not TruthValue.INDETERMINATE

    def as_bool(self):
        return None if self is TruthValue.INDETERMINATE else self is TruthValue.TRUE


# -- fast unreduced rational functions ------------------------------------

class _RF:
    """Unreduced ``num/den`` over Q[t]; only sign, order and zero-ness are
    ever read off, so no gcd is taken."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @staticmethod
    def of(x) -> "_RF":
        if isinstance(x, _RF):
            return x
        if isinstance(x, RatFuncElem):
            return _RF(list(x.num), list(x.den))
        if isinstance(x, (int, Fraction)):
            return _RF([x] if x else [], [1])
        raise TypeError(f"not an element of M_R: {x!r}")

    def __add__(self, o):
        if self.den == o.den:
            return _RF(dense.add(self.num, o.num), self.den)
        if not self.num:
            return o
        if not o.num:
            return self
        return _RF(dense.add(dense.mul(self.num, o.den), dense.mul(o.num, self.den)),
                   dense.mul(self.den, o.den))

    def __neg__(self):
        return _RF([-c for c in self.num], self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return _RF(dense.scale(self.num, o), self.den)
        if not self.num or not o.num:
            return _RF([], [1])
        return _RF(dense.mul(self.num, o.num), dense.mul(self.den, o.den))

    __rmul__ = __mul__

    def sign(self) -> int:
        if not self.num:
            return 0
        a = self.num[dense.order(self.num)] * self.den[dense.order(self.den)]
        return 1 if a > 0 else -1

    def val(self):
        if not self.num:
            return INF
        return dense.order(self.num) - dense.order(self.den)

    def freeze(self) -> RatFuncElem:
        return RatFuncElem(self.num, self.den)


# -- per-model primitive semantics ------------------------------------------

class _Semantics:
    def __init__(self, model: ModelDescriptor, to_precision: bool = False):
        self.model = model
        self.to_precision = to_precision
        self.is_r = model.tag is ModelTag.M_R
        self.one = _RF([1], [1]) if self.is_r else LaurentElem({0: 1})

    def lift(self, x):
        if self.is_r:
            return _RF.of(x)
        return LaurentElem.coerce(x)

    def const(self, n):
        return _RF([n] if n else [], [1]) if self.is_r else LaurentElem({0: n})

    # each relation returns True/False/None
    def eq(self, a, b):
        d = a - b
        if self.is_r:
            return not d.num
        return d.is_zero(self.to_precision)

    def val_le(self, a, b):
        """``v(a) <= v(b)``."""
        if self.is_r:
            return a.val() <= b.val()
        if self.to_precision:
            va = min(a.coeffs) if a.coeffs else INF
            vb = min(b.coeffs) if b.coeffs else INF
            return va <= vb
        alo, ahi = a.value_interval()
        blo, bhi = b.value_interval()
        if ahi <= blo:
            return True
        if alo > bhi:
            return False
        return None

    def preceq_v(self, a, b):  # a <=v b  iff  v(b) <= v(a)
        return self.val_le(b, a)

    def prec_v(self, a, b):
        r = self.val_le(a, b)
        return None if r is None else not r

    def preceq(self, a, b):
        if self.is_r:
            return (b - a).sign() >= 0
        return self.preceq_v(a, b)

    def prec(self, a, b):
        if self.is_r:
            return (b - a).sign() > 0
        return self.prec_v(a, b)


def _and(vals):
    out = True
    for v in vals:
        if v is False:
            return False
        if v is None:
            out = None
    return out


def _or(vals):
    out = False
    for v in vals:
        if v is True:
            return True
        if v is None:
            out = None
    return out


def _not(v):
    return None if v is None else not v


def _implies(a, b):
    return _or((_not(a), b))


def _iff(a, b):
    if a is None or b is None:
        return None
    return a == b


# -- compilation ---------------------------------------------------------------

def compile_term(t, sem: _Semantics):
    if isinstance(t, Var):
        name = t.name

        def var(env):
            try:
                return env[name]
            except KeyError:
                raise MissingAssignment(name) from None
        return var
    if isinstance(t, Const):
        c = sem.const(t.value)
        return lambda env: c
    if isinstance(t, Neg):
        f = compile_term(t.arg, sem)
        return lambda env: -f(env)
    parts = [compile_term(a, sem) for a in t.args]
    if isinstance(t, Add):
        def add(env):
            acc = parts[0](env)
            for p in parts[1:]:
                acc = acc + p(env)
            return acc
        return add
    if isinstance(t, Mul):
        def mul(env):
            acc = parts[0](env)
            for p in parts[1:]:
                acc = acc * p(env)
            return acc
        return mul
    raise TypeError(f"not a term: {t!r}")


def _compile_poly(p, sem: _Semantics):
    one = sem.one

    return lambda env: p.evaluate(env, one)


def _relation(sem: _Semantics, rel: Rel):
    if rel is Rel.eq:
        return sem.eq
    if rel is Rel.neq:
        return lambda a, b: _not(sem.eq(a, b))
    if rel is Rel.preceq:
        return sem.preceq
    if rel is Rel.prec:
        return sem.prec
    if rel is Rel.asymp:
        return lambda a, b: _and((sem.preceq(a, b), sem.preceq(b, a)))
    if rel is Rel.preceq_v:
        return sem.preceq_v
    if rel is Rel.prec_v:
        return sem.prec_v
    return lambda a, b: _and((sem.preceq_v(a, b), sem.preceq_v(b, a)))


_SIGMA_REL = {Sigma.EQ: Rel.eq, Sigma.NE: Rel.neq, Sigma.GE: Rel.preceq, Sigma.GT: Rel.prec}


def compile_formula(f, sem: _Semantics, witnesses=None):
    """Compile to ``env -> True/False/None``.

    Quantifiers are only accepted when ``witnesses`` maps the rendered
    existential subformula to a witness constructor ``(sem, env) -> element``;
    a universal quantifier is then left to the caller (it must have been
    stripped off as a sampled prefix).
    """
    if isinstance(f, TrueF):
        return lambda env: True
    if isinstance(f, FalseF):
        return lambda env: False
    if isinstance(f, Atom):
        lt, rt = compile_term(f.left, sem), compile_term(f.right, sem)
        rel = _relation(sem, f.rel)
        return lambda env: rel(lt(env), rt(env))
    if isinstance(f, OrderAtom):
        pe = _compile_poly(f.p, sem)
        zero = sem.const(0)
        rel = _relation(sem, _SIGMA_REL[f.sigma])
        return lambda env: rel(zero, pe(env))
    if isinstance(f, ValueAtom):
        pe, qe = _compile_poly(f.p, sem), _compile_poly(f.q, sem)
        if f.rho is Rho.LE:
            return lambda env: sem.val_le(pe(env), qe(env))
        if f.rho is Rho.LT:
            return lambda env: _not(sem.val_le(qe(env), pe(env)))
        return lambda env: _and((sem.val_le(pe(env), qe(env)), sem.val_le(qe(env), pe(env))))
    if isinstance(f, Not):
        g = compile_formula(f.arg, sem, witnesses)
        return lambda env: _not(g(env))
    if isinstance(f, And):
        gs = [compile_formula(a, sem, witnesses) for a in f.args]
        return lambda env: _and(g(env) for g in gs)
    if isinstance(f, Or):
        gs = [compile_formula(a, sem, witnesses) for a in f.args]
        return lambda env: _or(g(env) for g in gs)
    if isinstance(f, Implies):
        a, b = compile_formula(f.left, sem, witnesses), compile_formula(f.right, sem, witnesses)

        def implies(env):
            lhs = a(env)
            return True if lhs is False else _implies(lhs, b(env))
        return implies
    if isinstance(f, Iff):
        a, b = compile_formula(f.left, sem, witnesses), compile_formula(f.right, sem, witnesses)
        return lambda env: _iff(a(env), b(env))
    if isinstance(f, Exists) and witnesses is not None:
        return witnesses.compile_exists(f, sem)
    raise ValueError("eval_qf expects a quantifier-free formula")


def _lift_env(sem: _Semantics, assignment) -> dict:
    return {k: sem.lift(v) for k, v in assignment.items()}


def eval_qf(m: ModelDescriptor, f, assignment, to_precision: bool = False) -> TruthValue:
    """Three-valued truth of a quantifier-free formula under ``assignment``.

    Values may be integers, Fractions or elements of the model.  With
    ``to_precision`` a Laurent series that vanishes on all known
    coefficients is treated as zero.
    """
    missing = free_vars(f) - set(assignment)
    if missing:
        raise MissingAssignment(*sorted(missing))
    sem = _Semantics(m, to_precision)
    return TruthValue.of(compile_formula(f, sem)(_lift_env(sem, assignment)))


class Dichotomy(enum.Enum):
    ORDERING = "ordering"
    VALUATION = "valuation"


def classify_dichotomy(m: ModelDescriptor) -> Dichotomy:
    """``valuation`` iff ``0 < -1`` holds in the model."""
    sem = _Semantics(m)
    holds = sem.prec(sem.const(0), sem.const(-1))
    return Dichotomy.VALUATION if holds else Dichotomy.ORDERING


# -- sampling ------------------------------------------------------------------

def _uniform_int(rng: random.Random, lo: int, hi: int) -> int:
    return lo + int(rng.random() * (hi - lo + 1))


def _nonzero(rng: random.Random, bound: int) -> int:
    c = _uniform_int(rng, 1, bound)
    return c if rng.random() < 0.5 else -c


def _poly_coeffs(rng: random.Random, bound: int, degree: int) -> list:
    rand = rng.random
    width = 2 * bound + 1
    return [int(rand() * width) - bound for _ in range(degree + 1)]


def _draw_fraction(rng: random.Random, size_bound: int):
    num = dense.strip(_poly_coeffs(rng, size_bound, _uniform_int(rng, 0, size_bound)))
    den = dense.strip(_poly_coeffs(rng, size_bound, _uniform_int(rng, 0, size_bound)))
    if not den:
        den = [_nonzero(rng, size_bound)]
    return num, den


def draw_raw(m: ModelDescriptor, rng: random.Random, size_bound: int):
    """Like :func:`draw` but in the evaluator's internal representation."""
    if m.tag is ModelTag.M_R:
        return _RF(*_draw_fraction(rng, size_bound))
    return draw(m, rng, size_bound)


def draw(m: ModelDescriptor, rng: random.Random, size_bound: int):
    """One element drawn from ``rng`` (see :func:`sample`)."""
    if m.tag is ModelTag.M_R:
        return RatFuncElem(*_draw_fraction(rng, size_bound))
    if rng.random() < 1 / (2 * size_bound + 3):
        return LaurentElem()
    order = _uniform_int(rng, -size_bound, size_bound)
    coeffs = [_nonzero(rng, size_bound)] + _poly_coeffs(rng, size_bound, _uniform_int(rng, 0, size_bound))[1:]
    return LaurentElem({order + i: c for i, c in enumerate(coeffs)})


def sample(m: ModelDescriptor, seed, size_bound: int):
    """Deterministic pseudo-random element.

    ``M_R``: ``p(t)/q(t)`` with degrees at most ``size_bound`` and integer
    coefficients in ``[-size_bound, size_bound]``.  ``M_A``: an exact Laurent
    polynomial ``t^k (c0 + ... + cd t^d)`` with ``|k| <= size_bound``,
    ``d <= size_bound`` and coefficients in the same range.
    """
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    return draw(m, random.Random(seed), size_bound)


def sample_series(seed, size_bound: int, precision: int = DEFAULT_PRECISION) -> LaurentElem:
    """Truncated series with ``precision`` random coefficients after a
    nonzero leading one, order in ``[-size_bound, size_bound]``."""
    rng = random.Random(seed)
    order = _uniform_int(rng, -size_bound, size_bound)
    coeffs = [_nonzero(rng, size_bound)] + _poly_coeffs(rng, size_bound, precision - 2)
    return LaurentElem.from_relative(order, coeffs, precision)


def special_elements(m: ModelDescriptor) -> list:
    """Small elements that random draws rarely hit exactly."""
    t = m.t()
    return [m.element(0), m.element(1), m.element(-1), m.element(2), t, -t, t * t, m.element(1) / t]
