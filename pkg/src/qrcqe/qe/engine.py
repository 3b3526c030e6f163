"""Quantifier elimination per branch, guarded elimination and sentence
decision relative to a completion."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BudgetExceeded, NotASentence, UnsupportedFragment
from ..formula import (
    And, Exists, FalseF, Or, OrderAtom, Rho, Sigma, TrueF, ValueAtom,
    conj, count_atoms, disj, free_vars, normalize, render, to_surface,
)
from ..parser import parse
from ..theory import Branch, CompletionConfig
from .atoms import all_zero, atomize, ne0, negate
from .fragment_a import exists_order
from .fragment_b import exists_acf
from .fragment_c import exists_linear_values
from .simplify import simplify
from .testpoints import FiniteTerm, substitute_virtual


@dataclass(frozen=True)
class EliminationConfig:
    max_degree: int = 2
    max_atoms: int = 20_000
    simplify: bool = True

    def __post_init__(self):
        if self.max_degree not in (1, 2):
            raise ValueError(f"max_degree must be 1 or 2, got {self.max_degree}")
        if self.max_atoms < 1:
            raise ValueError("max_atoms must be positive")


@dataclass
class EliminationStats:
    quantifiers: int = 0
    conjuncts: int = 0
    atoms: int = 0
    seconds: float = 0.0

    def as_dict(self) -> dict:
        """Deterministic counters (wall-clock time is left out so repeated
        runs print identical records)."""
        return {"quantifiers": self.quantifiers, "conjuncts": self.conjuncts, "atoms": self.atoms}


def _location(q) -> str:
    kind = "E" if isinstance(q, Exists) else "A"
    where = f" at offset {q.pos}" if q.pos is not None else ""
    return f"{kind} {q.var}{where}"


class _Eliminator:
    def __init__(self, branch: Branch, cfg: EliminationConfig):
        self.branch = branch
        self.cfg = cfg
        self.stats = EliminationStats()

    def tidy(self, f):
        if self.cfg.simplify:
            f = simplify(f, self.branch)
        n = count_atoms(f)
        if n > self.cfg.max_atoms:
            raise BudgetExceeded(f"intermediate formula has {n} atoms (budget {self.cfg.max_atoms})")
        return f

    def run(self, f):
        if isinstance(f, (TrueF, FalseF, OrderAtom, ValueAtom)):
            return self.tidy(f)
        if isinstance(f, And):
            return self.tidy(conj(self.run(a) for a in f.args))
        if isinstance(f, Or):
            return self.tidy(disj(self.run(a) for a in f.args))
        body = self.run(f.body)
        self.stats.quantifiers += 1
        loc = _location(f)
        if isinstance(f, Exists):
            return self.tidy(self.exists(f.var, body, loc))
        return self.tidy(negate(self.exists(f.var, self.tidy(negate(body)), loc)))

    # -- one existential over a quantifier-free body ---------------------

    def exists(self, var, body, loc):
        if var not in free_vars(body):
            return body
        parts = []
        for conjunct in self.dnf(var, body):
            self.stats.conjuncts += 1
            inner = [a for a in conjunct if var in free_vars(a)]
            outer = [a for a in conjunct if var not in free_vars(a)]
            parts.append(conj(outer + [self.conjunct(var, inner, loc)]))
        return disj(parts)

    def dnf(self, var, f) -> list:
        """Disjunctive normal form in which subformulas free of ``var`` stay
        opaque."""
        if var not in free_vars(f) or isinstance(f, (OrderAtom, ValueAtom)):
            return [(f,)]
        if isinstance(f, Or):
            out = []
            for a in f.args:
                out.extend(self.dnf(var, a))
            self._budget(out)
            return out
        out = [()]
        for a in f.args:
            out = [x + y for x in out for y in self.dnf(var, a)]
            self._budget(out)
        return out

    def _budget(self, clauses):
        n = sum(len(c) for c in clauses)
        if n > self.cfg.max_atoms:
            raise BudgetExceeded(f"disjunctive normal form has {n} atoms (budget {self.cfg.max_atoms})")

    def conjunct(self, var, atoms, loc):
        maxd = self.cfg.max_degree
        orders = [a for a in atoms if isinstance(a, OrderAtom)]
        values = [a for a in atoms if isinstance(a, ValueAtom)]
        for a in orders:
            if a.p.degree(var) > maxd:
                raise UnsupportedFragment(loc, f"{var} has degree {a.p.degree(var)} in {a} (limit {maxd})")
        if self.branch is Branch.RCVF:
            if values:
                return self.pinned(var, orders, values, loc)
            return exists_order(var, orders)
        if not values:
            eqs = [a.p for a in orders if a.sigma is Sigma.EQ]
            neqs = [a.p for a in orders if a.sigma is Sigma.NE]
            return exists_acf(var, eqs, neqs)
        for a in orders:
            if a.p.degree(var) > 1:
                raise UnsupportedFragment(loc, f"{var} is not linear in {a} next to value atoms")
        for a in values:
            for side in (a.p, a.q):
                if side.degree(var) > 1:
                    raise UnsupportedFragment(loc, f"{var} is not linear in the value atom {a}")
        return exists_linear_values(var, orders, values, self.branch)

    def pinned(self, var, orders, values, loc):
        """Ordered branch with value atoms: a linear equation fixes ``var``
        to ``-a0/a1``, which substitutes into every other atom."""
        pivot = next((a for a in orders if a.sigma is Sigma.EQ and a.p.degree(var) == 1), None)
        if pivot is None:
            raise UnsupportedFragment(
                loc, f"{var} occurs in the value atom {values[0]} in the ordered branch "
                     "without a linear equation fixing it")
        a0, a1 = pivot.p.coeff_list(var)
        rest = [a for a in orders + values if a is not pivot]
        point = FiniteTerm(-a0, a1)
        fixed = conj([ne0(a1)] + [substitute_virtual(a, var, point) for a in rest])
        vanishing = simplify(all_zero([a0, a1]), self.branch)
        if isinstance(vanishing, FalseF):
            return fixed
        return disj([conj([vanishing, self.conjunct(var, rest, loc)]), fixed])


def _eliminate_atoms(f, b: Branch, cfg: EliminationConfig):
    el = _Eliminator(b, cfg)
    start = time.perf_counter()
    out = el.run(atomize(normalize(f), b))
    el.stats.seconds = time.perf_counter() - start
    el.stats.atoms = count_atoms(out)
    return out, el.stats


def eliminate(f, b: Branch, cfg: EliminationConfig | None = None):
    """Quantifier-free formula equivalent to ``f`` in every model of the
    branch; leaves are surface atoms."""
    out, _ = _eliminate_atoms(f, b, cfg or EliminationConfig())
    return to_surface(out)


def eliminate_with_stats(f, b: Branch, cfg: EliminationConfig | None = None):
    out, stats = _eliminate_atoms(f, b, cfg or EliminationConfig())
    return to_surface(out), stats


# -- guarded elimination -------------------------------------------------------

VALUED_GUARD = "0 < -1"
ORDERED_GUARD = "-1 < 0"


@dataclass(frozen=True)
class GuardedResult:
    acvf_part: object
    rcvf_part: object
    stats: dict = field(default_factory=dict, compare=False)

    def formula(self):
        """``(0 < -1 & acvf_part) | (-1 < 0 & rcvf_part)``, with constant
        parts folded away (and just the part when both agree)."""
        if self.acvf_part == self.rcvf_part:
            return self.acvf_part
        return disj([conj([parse(VALUED_GUARD), self.acvf_part]),
                     conj([parse(ORDERED_GUARD), self.rcvf_part])])

    def render(self) -> str:
        return render(self.formula())


def eliminate_guarded(f, cfg: EliminationConfig | None = None) -> GuardedResult:
    cfg = cfg or EliminationConfig()
    parts, stats = {}, {}
    for b in (Branch.ACVF, Branch.RCVF):
        try:
            parts[b], st = eliminate_with_stats(f, b, cfg)
        except (UnsupportedFragment, BudgetExceeded) as e:
            e.branch = b
            e.args = (f"{b.value}: {e}",)
            raise
        stats[b.value] = st.as_dict()
    return GuardedResult(parts[Branch.ACVF], parts[Branch.RCVF], stats)


# -- deciding sentences ----------------------------------------------------------

def _integer(p) -> Fraction:
    return Fraction(0) if p.is_zero() else Fraction(p.constant_value())


def _residue_zero(c: Fraction, cc: CompletionConfig) -> bool:
    """``c = 0`` in the field of the completion."""
    if cc.characteristic == 0:
        return c == 0
    if c.denominator % cc.characteristic == 0:
        raise ValueError(f"{c} is undefined in characteristic {cc.characteristic}")
    return c.numerator % cc.characteristic == 0


def integer_value(c: Fraction, cc: CompletionConfig):
    """Value of a rational constant in the completion (``None`` for infinity)."""
    if c == 0 or (cc.branch is Branch.ACVF and _residue_zero(c, cc)):
        return None
    if cc.branch is Branch.RCVF or cc.residue_characteristic == 0 or cc.characteristic != 0:
        return 0
    p = cc.residue_characteristic

    def order(n: int) -> int:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k
    return order(abs(c.numerator)) - order(c.denominator)


def _value_le(x, y) -> bool:
    return y is None or (x is not None and x <= y)


def evaluate_ground(f, cc: CompletionConfig) -> bool:
    """Truth of a ground polynomial-level formula in the completion."""
    if isinstance(f, TrueF):
        return True
    if isinstance(f, FalseF):
        return False
    if isinstance(f, And):
        return all(evaluate_ground(a, cc) for a in f.args)
    if isinstance(f, Or):
        return any(evaluate_ground(a, cc) for a in f.args)
    if isinstance(f, OrderAtom):
        c = _integer(f.p)
        if cc.branch is Branch.ACVF:
            zero = _residue_zero(c, cc)
            if f.sigma is Sigma.EQ:
                return zero
            if f.sigma is Sigma.NE:
                return not zero
            raise ValueError("order atoms in the valued branch carry = or != only")
        return {Sigma.EQ: c == 0, Sigma.NE: c != 0, Sigma.GE: c >= 0, Sigma.GT: c > 0}[f.sigma]
    if isinstance(f, ValueAtom):
        x, y = integer_value(_integer(f.p), cc), integer_value(_integer(f.q), cc)
        if f.rho is Rho.LE:
            return _value_le(x, y)
        if f.rho is Rho.LT:
            return not _value_le(y, x)
        return x == y
    raise TypeError(f"not a ground quantifier-free formula: {f!r}")


def decide_sentence(s, cc: CompletionConfig, cfg: EliminationConfig | None = None) -> bool:
    fv = free_vars(s)
    if fv:
        raise NotASentence(f"free variables: {', '.join(sorted(fv))}")
    out, _ = _eliminate_atoms(s, cc.branch, cfg or EliminationConfig())
    return evaluate_ground(out, cc)


__all__ = [
    "EliminationConfig", "EliminationStats", "GuardedResult", "decide_sentence", "eliminate",
    "eliminate_guarded", "eliminate_with_stats", "evaluate_ground", "integer_value",
]
