"""Sampled semantic comparison of quantifier-free formulas."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import FreeVariableMismatch
from ..formula import free_vars
from ..models.core import ModelDescriptor, _Semantics, compile_formula, draw_raw, special_elements
from ..models.conformance import _display


@dataclass
class EquivalenceResult:
    passed: bool
    checked: int
    indeterminate: int
    counterexample: dict | None = None

    def __bool__(self):
        return self.passed


def _draw_env(m, sem, rng, names, size_bound, specials):
    env, drawn = {}, []
    for name in names:
        u = rng.random()
        if u < 0.2:
            v = sem.lift(rng.choice(specials))
        elif u < 0.35 and drawn:
            v = rng.choice(drawn)
        else:
            v = draw_raw(m, rng, size_bound)
        env[name] = v
        drawn.append(v)
    return env


def qf_equiv_sample(m: ModelDescriptor, phi, psi, n: int = 500, seed=1, size_bound: int = 2,
                    retries: int = 3, variables=None) -> EquivalenceResult:
    """Evaluate ``phi`` and ``psi`` on ``n`` sampled assignments.

    Both must have the same free variables unless ``variables`` names the
    set to sample over explicitly.  An indeterminate outcome is redrawn with
    the same instance seed at doubled precision up to ``retries`` times and
    then skipped (counted in ``indeterminate``).
    """
    fa, fb = free_vars(phi), free_vars(psi)
    if variables is None:
        if fa != fb:
            raise FreeVariableMismatch(f"free variables differ: {sorted(fa)} vs {sorted(fb)}")
        names = sorted(fa)
    else:
        names = sorted(variables)
        if not (fa | fb) <= set(names):
            raise FreeVariableMismatch(f"variables {sorted((fa | fb) - set(names))} are not sampled")
    compiled = []
    prec = m.precision
    for _ in range(retries + 1):
        mm = m.with_precision(prec)
        sem = _Semantics(mm)
        compiled.append((mm, sem, compile_formula(phi, sem), compile_formula(psi, sem)))
        prec *= 2
    specials = special_elements(m)
    rng = random.Random(f"equiv:{seed}")
    checked = indeterminate = 0
    for _ in range(n):
        state = rng.getstate()
        for attempt, (mm, sem, f, g) in enumerate(compiled):
            if attempt:
                rng.setstate(state)
            env = _draw_env(mm, sem, rng, names, size_bound, specials)
            a, b = f(env), g(env)
            if (a is None or b is None) and attempt < retries:
                continue
            if a is None or b is None:
                indeterminate += 1
                break
            checked += 1
            if a != b:
                cex = {k: _display(v) for k, v in env.items()}
                return EquivalenceResult(False, checked, indeterminate, cex)
            break
    return EquivalenceResult(True, checked, indeterminate)
