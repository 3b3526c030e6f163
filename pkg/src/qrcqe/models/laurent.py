"""Truncated Laurent series over Q with pessimistic precision tracking.

An element stores its known nonzero coefficients sparsely together with an
absolute precision ``prec``: every coefficient of ``t^k`` with ``k < prec``
is known, everything from ``t^prec`` on is unknown.  Exact elements such as
integers have ``prec = INF``.  Comparisons that depend on unknown
coefficients return ``None`` (indeterminate).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from ..errors import NoSquareRoot

INF = float("inf")
DEFAULT_PRECISION = 24


def _q(c):
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class LaurentElem:
    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs=None, prec=INF):
        coeffs = coeffs or {}
        self.coeffs = {k: _q(c) for k, c in coeffs.items() if c != 0 and k < prec}
        self.prec = prec

    @classmethod
    def coerce(cls, x) -> "LaurentElem":
        if isinstance(x, LaurentElem):
            return x
        return cls({0: x})

    @classmethod
    def t(cls, k: int = 1) -> "LaurentElem":
        return cls({k: 1})

    @classmethod
    def from_relative(cls, order: int, coefficients, relative_precision: int) -> "LaurentElem":
        """``t^order * (c0 + c1 t + ...)`` known for exponents below
        ``order + relative_precision``."""
        return cls({order + i: c for i, c in enumerate(coefficients)}, order + relative_precision)

    # -- structure ---------------------------------------------------------
    @property
    def order(self):
        """Exact t-adic order, or ``None`` if no coefficient is known nonzero."""
        return min(self.coeffs) if self.coeffs else None

    @property
    def relative_precision(self):
        o = self.order
        return None if o is None else self.prec - o

    def is_exact(self) -> bool:
        return self.prec == INF

    def is_zero_to_precision(self) -> bool:
        return not self.coeffs

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec == INF

    def lower_order(self):
        """Lower bound on the t-adic order (``prec`` for zero-to-precision)."""
        return min(self.coeffs) if self.coeffs else self.prec

    def value_interval(self):
        """``(lo, hi)`` with ``v(self)`` known to lie in ``[lo, hi]``."""
        if self.coeffs:
            o = min(self.coeffs)
            return o, o
        return self.prec, INF

    def leading_coefficient(self):
        return self.coeffs[self.order] if self.coeffs else None

    def coefficient(self, k: int):
        if k >= self.prec:
            raise ValueError(f"coefficient of t^{k} is beyond precision {self.prec}")
        return self.coeffs.get(k, 0)

    def truncate(self, prec) -> "LaurentElem":
        return LaurentElem(self.coeffs, min(prec, self.prec))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = LaurentElem.coerce(other)
        prec = min(self.prec, o.prec)
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentElem(out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElem({k: -c for k, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-LaurentElem.coerce(other))

    def __rsub__(self, other):
        return LaurentElem.coerce(other) + (-self)

    def __mul__(self, other):
        o = LaurentElem.coerce(other)
        prec = min(self.lower_order() + o.prec, o.lower_order() + self.prec)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in o.coeffs.items():
                if i + j < prec:
                    out[i + j] = out.get(i + j, 0) + a * b
        return LaurentElem(out, prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = LaurentElem({0: 1})
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self, precision: int = DEFAULT_PRECISION) -> "LaurentElem":
        """Multiplicative inverse; the relative precision is preserved.

        The inverse of an exact non-monomial is truncated to ``precision``
        coefficients past its last known term."""
        o = self.order
        if o is None:
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        a0 = Fraction(self.coeffs[o])
        n = self.prec - o  # relative precision, may be INF
        if n == INF:
            # finite exact sums have infinite expansions; cap generously
            n = max(self.coeffs) - o + precision if len(self.coeffs) > 1 else INF
        if n == INF:
            return LaurentElem({-o: 1 / a0})
        # integer recurrence: inv_k = m_k / (d * a^(k+1)) after clearing
        # the common denominator d of the coefficients scaled to a = d * a0
        d = 1
        for c in self.coeffs.values():
            d = d * Fraction(c).denominator // gcd(d, Fraction(c).denominator)
        u = [int(Fraction(self.coeffs.get(o + i, 0)) * d) for i in range(n)]
        a = u[0]
        m = [1]
        apow = [1]
        for k in range(1, n):
            apow.append(apow[-1] * a)
            m.append(-sum(u[i] * m[k - i] * apow[i - 1] for i in range(1, k + 1) if u[i]))
        out = {}
        den = a
        for k in range(n):
            if m[k]:
                out[-o + k] = Fraction(m[k] * d, den)
            den *= a
        return LaurentElem(out, -o + n)

    def __truediv__(self, other):
        return self * LaurentElem.coerce(other).inverse()

    def __rtruediv__(self, other):
        return LaurentElem.coerce(other) * self.inverse()

    # -- three-valued predicates --------------------------------------------
    def is_zero(self, to_precision: bool = False):
        """``True``/``False`` or ``None`` when zero to precision only.

        With ``to_precision`` a series that vanishes on every known
        coefficient counts as zero.
        """
        if self.coeffs:
            return False
        if self.prec == INF or to_precision:
            return True
        return None

    def equals(self, other, to_precision: bool = False):
        return (self - other).is_zero(to_precision)

    def __eq__(self, other):
        """Structural equality (same known coefficients and precision)."""
        if isinstance(other, (int, Fraction)):
            other = LaurentElem.coerce(other)
        if not isinstance(other, LaurentElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.prec == other.prec

    def __hash__(self):
        return hash((tuple(sorted(self.coeffs.items())), self.prec))

    def __str__(self):
        if not self.coeffs:
            return "0" if self.prec == INF else f"O(t^{self.prec})"
        o = self.order
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            e = k - o
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}{mono}")
            else:
                parts.append(str(c))
        body = " + ".join(parts).replace("+ -", "- ")
        head = "" if o == 0 else f"t^{o}*"
        tail = "" if self.prec == INF else f" + O(t^{self.prec})"
        return f"{head}({body}){tail}"

    __repr__ = __str__


def value_le(a: LaurentElem, b: LaurentElem):
    """Three-valued ``v(a) <= v(b)``."""
    alo, ahi = a.value_interval()
    blo, bhi = b.value_interval()
    if ahi <= blo:
        return True
    if alo > bhi:
        return False
    return None


def value_lt(a: LaurentElem, b: LaurentElem):
    """Three-valued ``v(a) < v(b)``."""
    r = value_le(b, a)
    return None if r is None else not r


def _rational_sqrt(c: Fraction):
    c = Fraction(c)
    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def series_sqrt(s: LaurentElem, precision: int = DEFAULT_PRECISION) -> LaurentElem:
    """Square root with positive leading coefficient.

    Exists exactly when the order is even and the leading coefficient is a
    rational square.  The result has the relative precision of ``s`` (capped
    at ``precision`` when ``s`` is exact and not a monomial).
    """
    o = s.order
    if o is None:
        raise NoSquareRoot("input is zero to precision")
    if o % 2:
        raise NoSquareRoot("odd order")
    a0 = s.coeffs[o]
    r0 = _rational_sqrt(a0)
    if r0 is None:
        raise NoSquareRoot("non-square leading coefficient")
    n = s.prec - o
    if n == INF:
        if len(s.coeffs) == 1:
            return LaurentElem({o // 2: r0})
        n = precision
    u = [Fraction(s.coeffs.get(o + i, 0)) for i in range(n)]
    r = [r0]
    for k in range(1, n):
        acc = u[k] - sum(r[i] * r[k - i] for i in range(1, k))
        r.append(acc / (2 * r0))
    return LaurentElem({o // 2 + i: c for i, c in enumerate(r)}, o // 2 + n)
