"""Rational functions in ``t`` over Q, ordered with ``t`` a positive infinitesimal."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .. import dense


def _lcm(a, b):
    return a * b // gcd(a, b)


def _primitive(a: list) -> list:
    g = reduce(gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a] if g not in (0, 1) else a


def _zgcd(a: list, b: list) -> list:
    """Primitive gcd of integer polynomials (primitive remainder sequence)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        lb, db = b[-1], len(b) - 1
        r = list(a)
        while len(r) - 1 >= db:
            c, k = r[-1], len(r) - 1 - db
            r = [x * lb for x in r]
            for i, y in enumerate(b):
                r[i + k] -= c * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return b
        a, b = b, _primitive(r)
    return [1]


def _exact_div(a: list, b: list) -> list:
    """``a / b`` for integer polynomials when the quotient is integral."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] // lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[i + k] -= c * y
    return q


def _canonical(num: list, den: list):
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    num, den = dense.strip(num), dense.strip(den)
    if not num:
        return (), (1,)
    if not all(type(c) is int for c in num + den):
        scale = reduce(_lcm, (Fraction(c).denominator for c in num + den), 1)
        num = [int(Fraction(c) * scale) for c in num]
        den = [int(Fraction(c) * scale) for c in den]
    # a factor t^k is common whenever both sides vanish at 0
    k = min(dense.order(num), dense.order(den))
    if k:
        num, den = num[k:], den[k:]
    if len(num) > 1 and len(den) > 1:
        g = _zgcd(num, den)
        if len(g) > 1:
            num, den = _exact_div(num, g), _exact_div(den, g)
    content = reduce(gcd, num + den, 0)
    if den[dense.order(den)] < 0:
        content = -abs(content)
    else:
        content = abs(content)
    return tuple(c // content for c in num), tuple(c // content for c in den)


class RatFuncElem:
    """Reduced fraction ``num(t) / den(t)`` with integer coefficient tuples
    (low degree first), joint content 1 and positive lowest-order
    denominator coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        self.num, self.den = _canonical(list(num), list(den))

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def coerce(cls, x) -> "RatFuncElem":
        if isinstance(x, RatFuncElem):
            return x
        x = Fraction(x)
        if x == 0:
            return ZERO_R
        return cls._raw((x.numerator,), (x.denominator,))

    @classmethod
    def t(cls) -> "RatFuncElem":
        return cls._raw((0, 1), (1,))

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def sign(self) -> int:
        """Sign for ``t -> 0+``: product of the lowest-order coefficient signs."""
        if not self.num:
            return 0
        a = self.num[dense.order(self.num)]
        return 1 if a > 0 else -1

    def valuation(self):
        """t-adic order, ``None`` for zero."""
        if not self.num:
            return None
        return dense.order(self.num) - dense.order(self.den)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = RatFuncElem.coerce(other)
        if self.den == o.den:
            return RatFuncElem(dense.add(list(self.num), list(o.num)), list(self.den))
        return RatFuncElem(dense.add(dense.mul(self.num, o.den), dense.mul(o.num, self.den)),
                           dense.mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFuncElem._raw(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-RatFuncElem.coerce(other))

    def __rsub__(self, other):
        return RatFuncElem.coerce(other) + (-self)

    def __mul__(self, other):
        o = RatFuncElem.coerce(other)
        return RatFuncElem(dense.mul(self.num, o.num), dense.mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFuncElem.coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFuncElem(dense.mul(self.num, o.den), dense.mul(self.den, o.num))

    def __rtruediv__(self, other):
        return RatFuncElem.coerce(other) / self

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFuncElem.coerce(other)
        if not isinstance(other, RatFuncElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __str__(self):
        n = _tpoly_str(self.num)
        if self.den == (1,):
            return n
        return f"({n}) / ({_tpoly_str(self.den)})"

    __repr__ = __str__


def _tpoly_str(cs) -> str:
    from ..poly import Polynomial
    return str(Polynomial({(k,): c for k, c in enumerate(cs) if c}, ("t",)))


ZERO_R = RatFuncElem._raw((), (1,))
ONE_R = RatFuncElem._raw((1,), (1,))
