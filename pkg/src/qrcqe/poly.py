"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, so integer-only computations (the
valued branch never divides) stay in fast integer arithmetic.

Subresultant convention
-----------------------
For ``p = deg f >= q = deg g >= 1`` in the elimination variable, the
``j``-th subresultant ``S_j`` (``0 <= j < q``) is the classical determinant
polynomial of the ``(p+q-2j)``-row matrix whose rows are the coefficient
vectors of ``x^(q-j-1) f, ..., x f, f, x^(p-j-1) g, ..., x g, g`` (``f`` rows
first).  Concretely ``S_j = sum_i det(M_j^(i)) x^i`` where ``M_j^(i)`` keeps
the columns of ``x^(p+q-j-1), ..., x^(j+1)`` and the column of ``x^i``.
``S_0`` is the resultant ``Res(f, g) = lc(f)^q prod g(roots of f)``; for a
constant ``g`` the resultant is ``g^p``.  The principal coefficient
``psc_j`` is the coefficient of ``x^j`` in ``S_j``.  When specialized to a
field with ``lc(f), lc(g) != 0``, ``deg gcd(f, g)`` is the least ``j`` with
``psc_j != 0`` (or ``q`` if there is none) and ``S_j`` is proportional to the
gcd.  Both the valued-branch eliminator and the gcd oracle use this
convention and nothing else.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Mapping, Union

from .errors import ZeroInput

Number = Union[int, Fraction]


def qnorm(c) -> Number:
    """Canonical exact coefficient: ``int`` when integral, else Fraction."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _make(vars_: tuple, terms: dict) -> "Polynomial":
    terms = {e: c for e, c in terms.items() if c != 0}
    if vars_:
        used = [i for i in range(len(vars_)) if any(e[i] for e in terms)]
        if len(used) != len(vars_):
            vars_ = tuple(vars_[i] for i in used)
            terms = {tuple(e[i] for i in used): c for e, c in terms.items()}
    return Polynomial._raw(vars_, terms)


class Polynomial:
    """Immutable sparse polynomial.

    ``vars`` is the sorted tuple of variables that actually occur and
    ``terms`` maps exponent vectors (aligned with ``vars``) to nonzero
    coefficients.  The zero polynomial has no variables and no terms.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None, vars=()):
        vars_ = tuple(vars)
        if list(vars_) != sorted(set(vars_)):
            order = sorted(set(vars_))
            idx = [vars_.index(v) for v in order]
            terms = {tuple(e[i] for i in idx): c for e, c in (terms or {}).items()}
            vars_ = tuple(order)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != len(vars_) or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {vars_}")
            clean[e] = clean.get(e, 0) + qnorm(c)
        p = _make(vars_, clean)
        self.vars, self.terms, self._hash = p.vars, p.terms, None

    @classmethod
    def _raw(cls, vars_, terms):
        p = object.__new__(cls)
        p.vars, p.terms, p._hash = vars_, terms, None
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "Polynomial":
        c = qnorm(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls._raw((name,), {(1,): 1})

    @classmethod
    def coerce(cls, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return cls.const(other)

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Number:
        if self.vars:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), 0)

    def variables(self) -> frozenset:
        return frozenset(self.vars)

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coeffs_in(self, var: str) -> dict:
        """Map ``k -> coefficient of var^k`` (coefficients free of ``var``)."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: dict = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: _make(rest, t) for k, t in buckets.items()}

    def coeff(self, var: str, k: int) -> "Polynomial":
        return self.coeffs_in(var).get(k, ZERO)

    def coeff_list(self, var: str) -> list:
        """Dense coefficient list ``[c_0, ..., c_d]`` in ``var``."""
        cs = self.coeffs_in(var)
        d = self.degree(var)
        return [cs.get(k, ZERO) for k in range(d + 1)]

    def leading_coeff(self, var: str) -> "Polynomial":
        d = self.degree(var)
        return self.coeff(var, d) if d >= 0 else ZERO

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        nums = [abs(Fraction(c).numerator) for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
        return Fraction(reduce(gcd, nums), lcm)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    # -- arithmetic ---------------------------------------------------
    def _aligned(self, other: "Polynomial"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars_ = tuple(sorted(set(self.vars) | set(other.vars)))
        return vars_, _embed(self, vars_), _embed(other, vars_)

    def __add__(self, other):
        other = Polynomial.coerce(other)
        vars_, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return _make(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) + (-self)

    def __mul__(self, other):
        other = Polynomial.coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        if not other.vars:
            c = other.terms[()]
            if c == 1:
                return self
            return Polynomial._raw(self.vars, {e: qnorm(v * c) for e, v in self.terms.items()})
        if not self.vars:
            return other * self
        vars_, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return _make(vars_, {e: qnorm(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return self * Polynomial.const(c)

    def derivative(self, var: str) -> "Polynomial":
        if var not in self.vars:
            return ZERO
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return _make(self.vars, out)

    def substitute(self, var: str, g) -> "Polynomial":
        """Replace ``var`` by ``g`` and expand (Horner in ``var``)."""
        g = Polynomial.coerce(g)
        if var not in self.vars:
            return self
        cs = self.coeffs_in(var)
        result = ZERO
        for k in range(max(cs), -1, -1):
            result = result * g + cs.get(k, ZERO)
        return result

    def evaluate(self, assignment: Mapping, one=1):
        """Evaluate at ring elements.  ``one`` is the unit of the target ring;
        values must support ``+``, ``*`` and multiplication by rationals."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            from .errors import MissingAssignment
            raise MissingAssignment(*missing)
        powers: dict = {}
        total = None
        for e, c in self.terms.items():
            term = None
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                key = (v, k)
                if key not in powers:
                    powers[key] = _power(assignment[v], k)
                term = powers[key] if term is None else term * powers[key]
            term = one * c if term is None else term * c
            total = term if total is None else total + term
        return one * 0 if total is None else total

    # -- comparison, hashing, printing ----------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in graded-lexicographic order (highest first)."""
        return sorted(self.terms.items(), key=lambda ec: (-sum(ec[0]), tuple(-k for k in ec[0])))

    def monomial_str(self, e) -> str:
        parts = []
        for v, k in zip(self.vars, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _power(x, k):
    result = x
    for _ in range(k - 1):
        result = result * x
    return result


def _embed(p: Polynomial, vars_: tuple) -> dict:
    idx = [vars_.index(v) for v in p.vars]
    n = len(vars_)
    out = {}
    for e, c in p.terms.items():
        full = [0] * n
        for i, k in zip(idx, e):
            full[i] = k
        out[tuple(full)] = c
    return out


ZERO = Polynomial._raw((), {})
ONE = Polynomial._raw((), {(): 1})


def poly_arith(a: Polynomial, b: Polynomial | None, op: str, var: str | None = None) -> Polynomial:
    """Dispatch for ``add``, ``sub``, ``mul``, ``neg`` and ``derivative``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "derivative":
        return a.derivative(var)
    raise ValueError(f"unknown operation {op!r}")


def substitute_poly(f: Polynomial, var: str, g: Polynomial) -> Polynomial:
    return f.substitute(var, g)


def x_power(var: str, k: int) -> Polynomial:
    return Polynomial._raw((var,), {(k,): 1}) if k else ONE


def prem(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Pseudo-remainder: ``lc(b)^(deg a - deg b + 1) * a`` reduced modulo ``b``.

    Computed fraction-free, so it is valid in every characteristic.
    """
    db = b.degree(var)
    if db < 0:
        raise ZeroInput("pseudo-division by zero")
    r = a
    e = max(a.degree(var) - db + 1, 0)
    lb = b.leading_coeff(var)
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        r = lb * r - r.leading_coeff(var) * x_power(var, dr - db) * b
        e -= 1
    return r * lb ** e if e else r


def determinant(rows: list) -> Polynomial:
    """Determinant of a square matrix of polynomials (subset DP, exact)."""
    n = len(rows)
    if n == 0:
        return ONE
    dp = {0: ONE}
    for k in range(n):
        nxt: dict = {}
        for mask, val in dp.items():
            for c in range(n):
                if mask >> c & 1:
                    continue
                entry = rows[k][c]
                if entry.is_zero():
                    continue
                term = entry * val
                if bin(mask >> (c + 1)).count("1") & 1:
                    term = -term
                key = mask | (1 << c)
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = {m: v for m, v in nxt.items() if not v.is_zero()}
        if not dp:
            return ZERO
    return dp.get((1 << n) - 1, ZERO)


def _sylvester_rows(f: Polynomial, g: Polynomial, var: str, j: int):
    p, q = f.degree(var), g.degree(var)
    rows = []
    for i in range(q - j - 1, -1, -1):
        rows.append(f * x_power(var, i))
    for i in range(p - j - 1, -1, -1):
        rows.append(g * x_power(var, i))
    return [r.coeffs_in(var) for r in rows], p + q - j - 1


def subresultant(f: Polynomial, g: Polynomial, var: str, j: int) -> Polynomial:
    """``S_j(f, g)`` for ``0 <= j < deg g <= deg f`` (see module docstring)."""
    rows, top = _sylvester_rows(f, g, var, j)
    fixed = list(range(top, j, -1))
    result = ZERO
    for i in range(j, -1, -1):
        cols = fixed + [i]
        m = [[r.get(c, ZERO) for c in cols] for r in rows]
        d = determinant(m)
        if not d.is_zero():
            result = result + d * x_power(var, i)
    return result


def principal_coefficients(f: Polynomial, g: Polynomial, var: str) -> list:
    """``[psc_0, ..., psc_(q-1)]`` for ``q = deg g``."""
    q = g.degree(var)
    out = []
    for j in range(q):
        rows, top = _sylvester_rows(f, g, var, j)
        cols = list(range(top, j, -1)) + [j]
        out.append(determinant([[r.get(c, ZERO) for c in cols] for r in rows]))
    return out


@dataclass(frozen=True)
class SubresultantChain:
    """``f, g`` followed by the nonzero subresultants of strictly decreasing degree."""

    var: str
    entries: tuple
    resultant: Polynomial

    @property
    def last(self) -> Polynomial:
        return self.entries[-1]


def subresultant_chain(f: Polynomial, g: Polynomial, var: str) -> SubresultantChain:
    if f.is_zero() or g.is_zero():
        raise ZeroInput("subresultant chain of a zero polynomial")
    p, q = f.degree(var), g.degree(var)
    if p < q:
        raise ValueError("subresultant_chain expects deg f >= deg g")
    entries = [f, g]
    if q == 0:
        return SubresultantChain(var, tuple(entries), g ** p)
    res = ZERO
    for j in range(q - 1, -1, -1):
        s = subresultant(f, g, var, j)
        if j == 0:
            res = s
        if s.is_zero():
            continue
        if s.degree(var) < entries[-1].degree(var):
            entries.append(s)
    return SubresultantChain(var, tuple(entries), res)
