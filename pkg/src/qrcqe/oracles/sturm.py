"""Sturm sequences, Tarski queries and sign determination.

Polynomials are handled as dense coefficient lists (low degree first) over
an ordered base field: Q (``int``/``Fraction``) or Q(t) with ``t`` a positive
infinitesimal (:class:`RatFuncElem`).  All sign information about real roots
comes from Tarski queries, so roots that no element of the base field
separates (``t`` and ``2t`` say) are still told apart.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .. import dense
from ..errors import ZeroPolynomial
from ..formula import OrderAtom, Sigma
from ..models.ratfunc import RatFuncElem
from ..poly import Polynomial


class Base(enum.Enum):
    Q = "Q"
    QT = "Q(t)"

    @classmethod
    def _missing_(cls, value):
        aliases = {"q": cls.Q, "qt": cls.QT, "q(t)": cls.QT}
        return aliases.get(value.lower()) if isinstance(value, str) else None


def sign(c) -> int:
    if isinstance(c, RatFuncElem):
        return c.sign()
    return (c > 0) - (c < 0)


def to_dense(f, var: str = "x", base: Base = Base.Q, param: str = "t") -> list:
    """Dense coefficients of ``f`` in ``var`` as base-field elements."""
    if isinstance(f, list):
        return dense.strip(f)
    if not isinstance(f, Polynomial):
        f = Polynomial.coerce(f)
    out = []
    cs = f.coeffs_in(var)
    d = max(cs) if cs else -1
    for k in range(d + 1):
        c = cs.get(k)
        if c is None or c.is_zero():
            out.append(0)
            continue
        extra = c.variables() - {param}
        if base is Base.Q and c.variables():
            raise ValueError(f"coefficient {c} is not rational")
        if extra:
            raise ValueError(f"coefficient {c} involves {sorted(extra)}")
        if base is Base.Q:
            out.append(c.constant_value())
        else:
            out.append(RatFuncElem([c.coeff(param, i).constant_value() if not c.coeff(param, i).is_zero() else 0
                                    for i in range(c.degree(param) + 1)]))
    return dense.strip(out)


@dataclass(frozen=True)
class SturmData:
    """Signed remainder sequence ``P, Q, -rem(P, Q), ...`` over ``base``."""
    sequence: tuple
    base: Base


def signed_remainder_sequence(p: list, q: list, base: Base = Base.Q) -> SturmData:
    seq = [dense.strip(p)]
    q = dense.strip(q)
    while q:
        seq.append(q)
        r = dense.neg(dense.rem(seq[-2], q))
        q = r
    return SturmData(tuple(seq), base)


# -- signs at points, at infinities, and just beside points ---------------

def sign_at(p: list, x) -> int:
    return sign(dense.evaluate(p, x))


def sign_at_infinity(p: list, positive: bool) -> int:
    if not p:
        return 0
    s = sign(p[-1])
    if not positive and (len(p) - 1) % 2:
        s = -s
    return s


def sign_beside(p: list, x, right: bool) -> int:
    """Sign of ``p`` at ``x + eps`` (``right``) or ``x - eps``."""
    k = 0
    q = p
    while q:
        s = sign(dense.evaluate(q, x))
        if s:
            return s if (right or k % 2 == 0) else -s
        q = dense.derivative(q)
        k += 1
    return 0


def _variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _var_at(seq, endpoint, side: bool) -> int:
    """Sign variations at ``-inf``/``+inf`` (``endpoint`` is None) or beside
    a finite endpoint (``side`` True means just to its right)."""
    if endpoint is None:
        return _variations(sign_at_infinity(p, side) for p in seq)
    return _variations(sign_beside(p, endpoint, side) for p in seq)


def tarski_query(q: list, p: list, lo=None, hi=None) -> int:
    """``#{p = 0, q > 0} - #{p = 0, q < 0}`` over the open interval
    ``(lo, hi)`` of the real closure (``None`` endpoints are infinite)."""
    p = dense.strip(p)
    if not p:
        raise ZeroPolynomial("Tarski query of the zero polynomial")
    if len(p) == 1:
        return 0
    if lo is not None and hi is not None and sign(hi - lo) <= 0:
        return 0
    r = dense.rem(dense.mul(dense.derivative(p), q), p)
    seq = signed_remainder_sequence(p, r).sequence
    return _var_at(seq, lo, False if lo is None else True) - _var_at(seq, hi, True if hi is None else False)


def _parse_endpoint(e, base: Base):
    if e is None:
        return None
    if isinstance(e, str):
        if e in ("-inf", "inf", "+inf", "-oo", "oo"):
            return None
        e = Fraction(e)
    if base is Base.QT and not isinstance(e, RatFuncElem):
        return RatFuncElem.coerce(e)
    return e


def sturm_tarski(f, g=1, interval=(None, None), base: Base | str = Base.Q, var: str = "x") -> int:
    """Tarski query of ``g`` on the roots of ``f`` inside the open interval.

    ``f`` is replaced by its squarefree part first.  Endpoints may be base
    elements, rationals, ``None`` or the strings ``"-inf"``/``"inf"``.
    """
    base = Base(base) if isinstance(base, str) else base
    fd = to_dense(f, var, base)
    if not fd:
        raise ZeroPolynomial("sturm_tarski needs a nonzero f")
    gd = to_dense(g, var, base)
    if not gd:
        return 0
    fd = dense.squarefree_part(fd)
    lo, hi = (_parse_endpoint(e, base) for e in interval)
    return tarski_query(gd, fd, lo, hi)


def isolate_roots(f, var: str = "x") -> list:
    """Disjoint rational intervals ``(a, b]`` each holding exactly one real
    root of ``f`` over Q, by Sturm counting and bisection."""
    fd = dense.squarefree_part(to_dense(f, var, Base.Q))
    if len(fd) <= 1:
        return []
    seq = signed_remainder_sequence(fd, dense.derivative(fd)).sequence
    bound = 1 + max(abs(Fraction(c) / fd[-1]) for c in fd[:-1])

    def count(a, b):  # roots in (a, b]
        va = _variations(sign_at(p, a) for p in seq)
        vb = _variations(sign_at(p, b) for p in seq)
        return va - vb

    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.extend([(mid, b), (a, mid)])
    return sorted(out)


# -- sign determination ------------------------------------------------------

_SIGNS = (0, 1, -1)


def _solve(matrix, rhs):
    """Exact solve of a square nonsingular system."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def _independent_rows(rows) -> list:
    """Indices of a maximal linearly independent subset (greedy)."""
    basis, chosen = [], []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for piv, b in basis:
            if v[piv]:
                f = v[piv]
                v = [x - f * y for x, y in zip(v, b)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            continue
        pv = v[piv]
        basis.append((piv, [x / pv for x in v]))
        chosen.append(idx)
    return chosen


def sign_conditions(p: list, qs: list) -> dict:
    """Realizable sign vectors of ``qs`` on the real roots of ``p``, mapped to
    the number of roots realizing each (incremental sign determination)."""
    p = dense.squarefree_part(dense.strip(p))
    n_roots = tarski_query([1], p) if len(p) > 1 else 0
    if n_roots == 0:
        return {}
    cache: dict = {}
    conds = [()]
    alphas = [()]
    counts = [n_roots]
    done: list = []
    for q in qs:
        done.append(dense.strip(q))
        new_conds = [c + (s,) for c in conds for s in _SIGNS]
        new_alphas = [a + (e,) for a in alphas for e in (0, 1, 2)]
        rows = []
        for a in new_alphas:
            rows.append([_prod_sign(a, c) for c in new_conds])
        rhs = [_taq_prefix(a, done, p, cache) for a in new_alphas]
        # the tensor product of invertible matrices is square and invertible
        sol = _solve(rows, rhs)
        keep = [j for j, c in enumerate(sol) if c != 0]
        conds = [new_conds[j] for j in keep]
        counts = [int(sol[j]) for j in keep]
        cols = [[row[j] for j in keep] for row in rows]
        chosen = _independent_rows(cols)
        alphas = [new_alphas[i] for i in chosen]
    return dict(zip(conds, counts))


def _prod_sign(alpha, cond) -> int:
    s = 1
    for a, c in zip(alpha, cond):
        if a == 0:
            continue
        if c == 0:
            return 0
        if a == 1:
            s *= c
    return s


def _taq_prefix(alpha, polys, p, cache) -> int:
    if alpha not in cache:
        q = [1]
        for a, pol in zip(alpha, polys):
            if a:
                q = dense.mul(q, pol if a == 1 else dense.mul(pol, pol))
                r = dense.rem(q, p)
                q = r
                if not q:
                    break
        cache[alpha] = tarski_query(q, p) if q else 0
    return cache[alpha]


# -- the order oracle ---------------------------------------------------------

def _holds(s: int, sigma: Sigma) -> bool:
    if sigma is Sigma.EQ:
        return s == 0
    if sigma is Sigma.NE:
        return s != 0
    if sigma is Sigma.GE:
        return s >= 0
    return s > 0


def _normalize_atoms(atoms, var: str, base: Base) -> list:
    out = []
    for a in atoms:
        if isinstance(a, OrderAtom):
            out.append((to_dense(a.p, var, base), a.sigma))
        else:
            p, sigma = a
            out.append((to_dense(p, var, base), sigma))
    return out


def _cell_ok(cond, index, live) -> bool:
    """The root itself, or the point just right of it, satisfies every atom."""
    if all(_holds(cond[ids[0]], s) for (ids, _), (_, s) in zip(index, live)):
        return True
    for (ids, top), (_, s) in zip(index, live):
        signs = [cond[i] for i in ids] + [top]
        if not _holds(next((x for x in signs if x), 0), s):
            return False
    return True


def decide_exists_order(atoms, var: str = "x", base: Base | str = Base.Q) -> bool:
    """Decide ``E var. AND(p_i sigma_i 0)`` over the real closure of the base.

    The candidate cells are the left unbounded interval, every real root of
    an atom polynomial and the point just right of every such root; their
    sign vectors come from sign determination (one atom polynomial at a
    time) on the polynomials and their derivatives.
    """
    base = Base(base) if isinstance(base, str) else base
    items = _normalize_atoms(atoms, var, base)
    const_ok = True
    live = []
    for p, sigma in items:
        if len(p) <= 1:
            const_ok = const_ok and _holds(sign(p[0]) if p else 0, sigma)
        else:
            live.append((p, sigma))
    if not const_ok:
        return False
    if not live:
        return True
    # left unbounded cell
    if all(_holds(sign_at_infinity(p, False), s) for p, s in live):
        return True
    # derivative families: p, p', p'', ... (non-constant members only)
    family, index = [], []
    for p, _ in live:
        ids = []
        q = p
        while len(q) > 1:
            ids.append(len(family))
            family.append(q)
            q = dense.derivative(q)
        index.append((ids, sign(q[0]) if q else 0))
    # the roots of each atom polynomial separately cover the roots of their product
    for p, _ in live:
        for cond in sign_conditions(p, family):
            if _cell_ok(cond, index, live):
                return True
    return False


__all__ = [
    "Base", "SturmData", "decide_exists_order", "isolate_roots", "sign", "sign_conditions",
    "signed_remainder_sequence", "sturm_tarski", "tarski_query", "to_dense",
]
