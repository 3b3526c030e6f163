"""Random formulas and differential fuzzing of the eliminators.

* :func:`random_formula` draws surface formulas over every connective,
  relation and quantifier (used for parser round trips).
* :func:`fuzz_fragment_a` compares real closed elimination against the
  Sturm oracle, with parameters instantiated from Q and from Q(t).
* :func:`fuzz_fragment_b` compares algebraically closed elimination of
  ``E x. f = 0 & g != 0`` against Euclid over Q.
* :func:`fuzz_fragment_c` checks linear value-atom elimination one-sidedly
  on Laurent-series samples: whenever a sampled ``x`` satisfies the body,
  the eliminated formula must hold.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnsupportedFragment
from .formula import (
    Add, And, Atom, Const, Exists, FalseF, Forall, Iff, Implies, Mul, Neg, Not, Or, Rel, Sigma,
    TrueF, Var, conj, poly_to_term, render,
)
from .models.core import M_A, M_R, _Semantics, compile_formula, draw, draw_raw, special_elements
from .oracles.acf import decide_exists_acf
from .oracles.sturm import Base, decide_exists_order
from .poly import ZERO, Polynomial
from .qe.engine import EliminationConfig, eliminate
from .theory import Branch

# -- random surface formulas -----------------------------------------------------

RELATIONS = tuple(Rel)


def random_term(rng: random.Random, names, depth: int = 2):
    if depth <= 0 or rng.random() < 0.35:
        if rng.random() < 0.4:
            return Const(rng.randint(0, 3))
        return Var(rng.choice(names))
    k = rng.random()
    if k < 0.4:
        return Add(tuple(random_term(rng, names, depth - 1) for _ in range(rng.randint(2, 3))))
    if k < 0.8:
        return Mul(tuple(random_term(rng, names, depth - 1) for _ in range(rng.randint(2, 3))))
    return Neg(random_term(rng, names, depth - 1))


def random_formula(rng: random.Random, names=("x", "y", "z"), depth: int = 3):
    """A random surface formula; bound names are drawn from ``names`` too so
    shadowing and reuse both occur."""
    names = list(names)
    if depth <= 0 or rng.random() < 0.25:
        u = rng.random()
        if u < 0.05:
            return TrueF()
        if u < 0.1:
            return FalseF()
        return Atom(random_term(rng, names), rng.choice(RELATIONS), random_term(rng, names))
    k = rng.randrange(7)
    sub = lambda: random_formula(rng, names, depth - 1)  # noqa: E731
    if k == 0:
        return Not(sub())
    if k == 1:
        return And(tuple(sub() for _ in range(rng.randint(2, 3))))
    if k == 2:
        return Or(tuple(sub() for _ in range(rng.randint(2, 3))))
    if k == 3:
        return Implies(sub(), sub())
    if k == 4:
        return Iff(sub(), sub())
    if k == 5:
        return Exists(rng.choice(names), sub())
    return Forall(rng.choice(names), sub())


# -- reports ----------------------------------------------------------------------

@dataclass
class FuzzReport:
    fragment: str
    cases: int
    agree: int = 0
    indeterminate: int = 0
    unsupported: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.unsupported == 0

    def summary(self) -> str:
        line = f"{self.agree}/{self.cases} agree"
        if self.indeterminate:
            line += f", {self.indeterminate} indeterminate"
        if self.unsupported:
            line += f", {self.unsupported} unsupported"
        if self.mismatches:
            line += f", {len(self.mismatches)} mismatches"
        return line


# -- shared helpers -----------------------------------------------------------------

X = Polynomial.var("x")
PARAMS = ("y", "z")


def _coefficient(rng: random.Random, params, bound: int = 5) -> Polynomial:
    """``c0 + c1*p`` with small integers, often sparse."""
    c = Polynomial.const(rng.randint(-bound, bound) if rng.random() < 0.8 else 0)
    if params and rng.random() < 0.35:
        c = c + Polynomial.var(rng.choice(params)) * rng.randint(-bound, bound)
    return c


def _random_poly(rng, params, degree: int) -> Polynomial:
    p = ZERO
    for k in range(degree + 1):
        p = p + _coefficient(rng, params) * X ** k
    return p


_SURFACE = {
    Sigma.EQ: lambda t: Atom(t, Rel.eq, Const(0)),
    Sigma.NE: lambda t: Atom(t, Rel.neq, Const(0)),
    Sigma.GE: lambda t: Atom(Const(0), Rel.preceq, t),
    Sigma.GT: lambda t: Atom(Const(0), Rel.prec, t),
}


def _instantiate(p: Polynomial, env: dict) -> list:
    """Dense coefficients in ``x`` after substituting parameter values."""
    cs = p.coeff_list("x")
    return [c.evaluate(env) if not c.is_zero() else 0 for c in cs]


def _param_names(polys) -> list:
    names = set()
    for p in polys:
        names |= p.variables()
    return sorted(names - {"x"})


# -- fragment A -------------------------------------------------------------------------

def fragment_a_instance(rng: random.Random):
    """``E x. AND(p_i sigma_i 0)`` with 1 to 4 atoms of degree <= 2."""
    atoms = []
    for _ in range(rng.randint(1, 4)):
        p = _random_poly(rng, PARAMS[:1], rng.randint(1, 2))
        if "x" not in p.variables():
            p = p + X
        atoms.append((p, rng.choice(list(Sigma))))
    body = conj(_SURFACE[s](poly_to_term(p)) for p, s in atoms)
    return Exists("x", body), atoms


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 3))


def fuzz_fragment_a(cases: int = 500, seed=1, cfg: EliminationConfig | None = None) -> FuzzReport:
    rng = random.Random(f"fragment-a:{seed}")
    report = FuzzReport("a", cases)
    sem = _Semantics(M_R)
    for _ in range(cases):
        f, atoms = fragment_a_instance(rng)
        names = _param_names(p for p, _ in atoms)
        try:
            qf = eliminate(f, Branch.RCVF, cfg)
        except UnsupportedFragment:
            report.unsupported += 1
            continue
        check = compile_formula(qf, sem)
        ok = True
        for base in (Base.Q, Base.QT):
            if base is Base.Q:
                env = {n: _rational(rng) for n in names}
            else:
                env = {n: draw(M_R, rng, 2) for n in names}
            got = check({n: sem.lift(v) for n, v in env.items()})
            want = decide_exists_order([(_instantiate(p, env), s) for p, s in atoms], "x", base)
            if got is None:
                report.indeterminate += 1
                ok = False
                break
            if got != want:
                report.mismatches.append({"formula": render(f), "result": render(qf),
                                          "params": {k: str(v) for k, v in env.items()},
                                          "eliminated": got, "oracle": want})
                ok = False
                break
        report.agree += ok
    return report


# -- fragment B -------------------------------------------------------------------------

def fragment_b_instance(rng: random.Random):
    f = _random_poly(rng, PARAMS, rng.randint(0, 2))
    g = _random_poly(rng, PARAMS, rng.randint(0, 2))
    if "x" not in (f.variables() | g.variables()):
        f = f + X
    body = And((_SURFACE[Sigma.EQ](poly_to_term(f)), _SURFACE[Sigma.NE](poly_to_term(g))))
    return Exists("x", body), f, g


def fuzz_fragment_b(cases: int = 300, seed=1, cfg: EliminationConfig | None = None) -> FuzzReport:
    rng = random.Random(f"fragment-b:{seed}")
    report = FuzzReport("b", cases)
    sem = _Semantics(M_A)
    for _ in range(cases):
        f, fp, gp = fragment_b_instance(rng)
        names = _param_names([fp, gp])
        try:
            qf = eliminate(f, Branch.ACVF, cfg)
        except UnsupportedFragment:
            report.unsupported += 1
            continue
        # small parameter values hit the degenerate leading coefficients often
        env = {n: Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))) for n in names}
        got = compile_formula(qf, sem)({n: sem.lift(v) for n, v in env.items()})
        want = decide_exists_acf([_instantiate(fp, env)], [_instantiate(gp, env)], "x")
        if got is None:
            report.indeterminate += 1
        elif got != want:
            report.mismatches.append({"formula": render(f), "result": render(qf),
                                      "params": {k: str(v) for k, v in env.items()},
                                      "eliminated": got, "oracle": want})
        else:
            report.agree += 1
    return report


# -- fragment C -------------------------------------------------------------------------

_VALUE_RELS = (Rel.preceq_v, Rel.prec_v, Rel.asymp_v)


def _linear(rng: random.Random, params) -> Polynomial:
    a = rng.choice((1, 1, -1, 2))
    b = Polynomial.var(rng.choice(params)) if rng.random() < 0.7 else Polynomial.const(rng.randint(-2, 2))
    return X * a + b if rng.random() < 0.8 else b


def fragment_c_instance(rng: random.Random):
    parts = []
    for _ in range(rng.randint(1, 3)):
        u = rng.random()
        if u < 0.75:
            lhs, rhs = _linear(rng, PARAMS), _linear(rng, PARAMS)
            parts.append(Atom(poly_to_term(lhs), rng.choice(_VALUE_RELS), poly_to_term(rhs)))
        elif u < 0.9:
            parts.append(Atom(poly_to_term(_linear(rng, PARAMS)), Rel.neq, Const(0)))
        else:
            parts.append(Atom(poly_to_term(_linear(rng, PARAMS)), Rel.eq, Const(0)))
    body = conj(parts)
    return Exists("x", body), body


def fuzz_fragment_c(cases: int = 200, seed=1, samples: int = 20,
                    cfg: EliminationConfig | None = None) -> FuzzReport:
    """One-sided: a sampled witness ``x`` for the body forces the eliminated
    formula to hold at the same parameters."""
    rng = random.Random(f"fragment-c:{seed}")
    report = FuzzReport("c", cases)
    sem = _Semantics(M_A)
    specials = special_elements(M_A)
    for _ in range(cases):
        f, body = fragment_c_instance(rng)
        try:
            qf = eliminate(f, Branch.ACVF, cfg)
        except UnsupportedFragment:
            report.unsupported += 1
            continue
        body_c, qf_c = compile_formula(body, sem), compile_formula(qf, sem)
        bad = None
        for _ in range(samples):
            env = {n: sem.lift(rng.choice(specials)) if rng.random() < 0.3 else draw_raw(M_A, rng, 2)
                   for n in PARAMS}
            # witnesses near the parameters make the body true more often
            base = rng.choice([env["y"], env["z"], sem.lift(0)])
            for xv in (base, base + draw_raw(M_A, rng, 2), draw_raw(M_A, rng, 2)):
                env["x"] = xv
                if body_c(env) is True:
                    if qf_c(env) is False:
                        bad = {k: str(v) for k, v in env.items()}
                    break
            if bad:
                break
        if bad:
            report.mismatches.append({"formula": render(f), "result": render(qf), "params": bad})
        else:
            report.agree += 1
    return report


FUZZERS = {"a": fuzz_fragment_a, "b": fuzz_fragment_b, "c": fuzz_fragment_c}

__all__ = [
    "FUZZERS", "FuzzReport", "fragment_a_instance", "fragment_b_instance", "fragment_c_instance",
    "fuzz_fragment_a", "fuzz_fragment_b", "fuzz_fragment_c", "random_formula", "random_term",
]
