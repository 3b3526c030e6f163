"""Sampled conformance checks of axiom sets against the built-in models."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from ..errors import NoSquareRoot, UnsupportedQuantifierShape
from ..parser import parse
from ..formula import And, Exists, Forall, Iff, Implies, Not, Or, free_vars, render
from .core import (
    M_R, ModelDescriptor, ModelTag, TruthValue, _RF, _Semantics, compile_formula,
    draw_raw, special_elements,
)
from .laurent import LaurentElem, series_sqrt


class _NoWitness(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


WitnessFn = Callable[[_Semantics, dict], object]


class WitnessRegistry:
    """Witness constructors for existential subformulas, keyed by model and
    the rendered existential.  A constructor returns the witness value or
    raises :class:`NoSquareRoot` when the model lacks one."""

    def __init__(self):
        self._table: dict = {}

    def register(self, tag: ModelTag, existential: str, fn: WitnessFn):
        """``existential`` is parsed and re-rendered, so any spelling works."""
        self._table[(tag, render(parse(existential)))] = fn

    def lookup(self, tag: ModelTag, f: Exists):
        return self._table.get((tag, render(f)))

    def compile_exists(self, f: Exists, sem: _Semantics):
        fn = self.lookup(sem.model.tag, f)
        if fn is None:
            raise UnsupportedQuantifierShape(
                f"no witness constructor for {render(f)!r} in {sem.model.name}")
        body = compile_formula(f.body, sem, self)
        var = f.var

        def ev(env):
            try:
                w = fn(sem, env)
            except NoSquareRoot as exc:
                raise _NoWitness(exc.reason) from None
            return body({**env, var: w})
        return ev


def _inverse(sem: _Semantics, env):
    x = env["x"]
    if sem.is_r:
        return _RF(list(x.den), list(x.num))
    return x.inverse(sem.model.precision)


def _sqrt(sem: _Semantics, env):
    x = env["x"]
    if x.is_exact_zero():
        return x
    return series_sqrt(x, sem.model.precision)


def default_witnesses() -> WitnessRegistry:
    reg = WitnessRegistry()
    for tag in ModelTag:
        reg.register(tag, "E y. x*y = 1", _inverse)
        reg.register(tag, "E x. x != 0 & !(x ~v 1)", lambda sem, env: sem.lift(sem.model.t()))
    reg.register(ModelTag.M_A, "E y. y*y = x", _sqrt)
    return reg


def prenex_universal(f):
    """Split ``A x1 ... A xk. M`` into ``([x1..xk], M)``, also pulling
    universals out of the conclusion of an implication."""
    names = []
    while True:
        if isinstance(f, Forall):
            names.append(f.var)
            f = f.body
        elif isinstance(f, Implies) and isinstance(f.right, Forall) and f.right.var not in free_vars(f.left):
            names.append(f.right.var)
            f = Implies(f.left, f.right.body)
        else:
            return names, f


def _has_exists(f) -> bool:
    if isinstance(f, Exists):
        return True
    if isinstance(f, Not):
        return _has_exists(f.arg)
    if isinstance(f, (And, Or)):
        return any(_has_exists(a) for a in f.args)
    if isinstance(f, (Implies, Iff)):
        return _has_exists(f.left) or _has_exists(f.right)
    if isinstance(f, Forall):
        return _has_exists(f.body)
    return False


def _display(v) -> str:
    return str(v.freeze()) if isinstance(v, _RF) else str(v)


@dataclass
class AxiomResult:
    axiom: str
    samples: int = 0
    violations: int = 0
    indeterminate: int = 0
    witness_missing: int = 0
    skipped: int = 0
    first_counterexample: dict | None = None
    witness_reasons: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0


@dataclass
class NamedCheck:
    name: str
    samples: int
    violations: int
    first_counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.violations == 0


@dataclass
class AxiomReport:
    model: str
    n: int
    seed: object
    results: list
    checks: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.results) + sum(c.violations for c in self.checks)

    @property
    def first_counterexample(self):
        for r in self.results:
            if r.first_counterexample is not None:
                return r.axiom, r.first_counterexample
        for c in self.checks:
            if c.first_counterexample is not None:
                return c.name, c.first_counterexample
        return None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def result_for(self, axiom_text: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom_text:
                return r
        raise KeyError(axiom_text)


def _draw_tuple(m: ModelDescriptor, sem: _Semantics, rng: random.Random, names, size_bound: int,
                specials: list) -> dict:
    env: dict = {}
    drawn: list = []
    for name in names:
        u = rng.random()
        if u < 0.15:
            v = sem.lift(rng.choice(specials))
        elif u < 0.3 and drawn:
            v = rng.choice(drawn)
        else:
            v = draw_raw(m, rng, size_bound)
        env[name] = v
        drawn.append(v)
    return env


def check_axioms_sampled(m: ModelDescriptor, axioms, n: int = 500, seed=1, size_bound: int = 2,
                         witnesses: WitnessRegistry | None = None, where=None,
                         natural_valuation: bool = True, retries: int = 3) -> AxiomReport:
    """Instantiate each axiom's universal prefix with ``n`` sampled tuples.

    Existential subformulas are evaluated through ``witnesses``; axioms with
    an unregistered existential raise :class:`UnsupportedQuantifierShape`.
    ``where`` optionally filters sampled assignments (given the model
    elements).  Indeterminate outcomes are redrawn with the same instance
    seed at doubled precision up to ``retries`` times.  For ``M_R`` the
    report also carries the natural-valuation check.
    """
    witnesses = witnesses or default_witnesses()
    results = []
    for idx, ax in enumerate(axioms):
        text = render(ax)
        names, matrix = prenex_universal(ax)
        uses_witness = _has_exists(matrix)
        sems = []
        prec = m.precision
        for _ in range(retries + 1):
            mm = m.with_precision(prec)
            # witnesses are truncated series, compared on their known coefficients
            sem = _Semantics(mm, to_precision=uses_witness and m.tag is ModelTag.M_A)
            sems.append((mm, sem, compile_formula(matrix, sem, witnesses)))
            prec *= 2
        specials = special_elements(m)
        res = AxiomResult(text)
        rng = random.Random(f"{seed}:{idx}")
        for i in range(n):
            state = rng.getstate()
            for attempt, (mm, sem, fn) in enumerate(sems):
                if attempt:
                    rng.setstate(state)  # same instance, higher precision
                env = _draw_tuple(mm, sem, rng, names, size_bound, specials)
                if where is not None and not where({k: _public(v) for k, v in env.items()}):
                    res.skipped += 1
                    break
                try:
                    value = fn(env)
                except _NoWitness as exc:
                    res.witness_missing += 1
                    res.witness_reasons[exc.reason] = res.witness_reasons.get(exc.reason, 0) + 1
                    break
                if value is None and attempt < retries:
                    continue
                res.samples += 1
                if value is None:
                    res.indeterminate += 1
                elif value is False:
                    res.violations += 1
                    if res.first_counterexample is None:
                        res.first_counterexample = {k: _display(v) for k, v in env.items()}
                break
        results.append(res)
    checks = []
    if natural_valuation and m.tag is ModelTag.M_R:
        checks.append(natural_valuation_check(n, seed, size_bound))
    return AxiomReport(m.name, n, seed, results, checks)


def _public(v):
    return v.freeze() if isinstance(v, _RF) else v


def natural_valuation_check(n: int, seed=1, size_bound: int = 2) -> NamedCheck:
    """In ``M_R``: ``r`` lies between ``-k`` and ``k`` for some integer
    ``k <= size_bound + 1`` exactly when ``v(r) >= 0``."""
    bound = size_bound + 1
    rng = random.Random(f"{seed}:natural-valuation")
    violations, first = 0, None
    sem = _Semantics(M_R)
    for _ in range(n):
        r = draw_raw(M_R, rng, size_bound)
        bounded = any(sem.preceq(sem.const(-k), r) and sem.preceq(r, sem.const(k))
                      for k in range(1, bound + 1))
        if bounded != (r.val() >= 0):
            violations += 1
            if first is None:
                first = {"r": _display(r)}
    return NamedCheck("natural-valuation", n, violations, first)


def has_square_root(x) -> bool:
    """Whether :func:`series_sqrt` succeeds on ``x`` (``LaurentElem``)."""
    try:
        series_sqrt(LaurentElem.coerce(x))
    except NoSquareRoot:
        return False
    return True


__all__ = [
    "AxiomReport", "AxiomResult", "NamedCheck", "WitnessRegistry", "check_axioms_sampled",
    "default_witnesses", "has_square_root", "natural_valuation_check", "prenex_universal",
    "TruthValue",
]
