"""Ground truth for ``E x. (AND f_i = 0) & (AND g_j != 0)`` over an
algebraically closed field of characteristic 0, by Euclid over Q."""
from __future__ import annotations

from .. import dense
from .sturm import Base, to_dense


def decide_exists_acf(equations, disequations, var: str = "x") -> bool:
    """``equations``/``disequations`` are polynomials in ``var`` with
    rational coefficients.

    With no (nonzero) equation a witness avoids the finitely many roots of
    the disequations, so the answer is whether every ``g_j`` is nonzero.
    Otherwise ``F = gcd(f_i)`` must have a root that is not a root of
    ``G = prod g_j``, i.e. the squarefree part of ``F`` must not divide ``G``.
    """
    fs = [to_dense(f, var, Base.Q) for f in equations]
    gs = [to_dense(g, var, Base.Q) for g in disequations]
    if any(not g for g in gs):
        return False
    big = [1]
    for g in gs:
        big = dense.mul(big, g)
    fs = [f for f in fs if f]
    if not fs:
        return True
    common = fs[0]
    for f in fs[1:]:
        common = dense.gcd(common, f)
    if len(common) <= 1:
        return False
    core = dense.squarefree_part(common)
    return bool(dense.rem(big, core))
