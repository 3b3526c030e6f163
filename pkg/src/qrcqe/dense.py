"""Dense univariate polynomial helpers over an exact field.

A polynomial is a list of coefficients ``[c0, c1, ..., cd]`` (low to high)
with no trailing zeros.  Coefficients may be ``int``/``Fraction`` or any
field element supporting ``+ - * /`` and comparison with ``0`` (rational
functions in :mod:`qrcqe.models.ratfunc`).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from functools import reduce


def div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


def strip(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1


def add(a, b):
    n = max(len(a), len(b))
    return strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return strip(out)


def scale(a, c):
    return strip([x * c for x in a])


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [], strip(a)
    q = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        k = len(a) - 1 - db
        c = div(a[-1], lb)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = a[i + k] - c * y
        a.pop()
        a = strip(a)
    return strip(q), a


def rem(a, b):
    return divmod_(a, b)[1]


def monic(a):
    if not a:
        return a
    lc = a[-1]
    return [div(c, lc) for c in a]


def gcd(a, b):
    """Monic gcd (Euclid over the coefficient field)."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(a):
    return strip([a[i] * i for i in range(1, len(a))])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_part(a):
    g = gcd(a, derivative(a))
    if len(g) <= 1:
        return monic(a)
    return monic(divmod_(a, g)[0])


def primitive_int(a):
    """Scale a rational-coefficient polynomial to coprime integers (positive factor)."""
    if not a:
        return []
    dens = [Fraction(c).denominator for c in a]
    lcm = reduce(lambda x, y: x * y // igcd(x, y), dens, 1)
    ints = [int(Fraction(c) * lcm) for c in a]
    g = reduce(igcd, (abs(c) for c in ints), 0) or 1
    return [c // g for c in ints]


def order(a) -> int:
    """Index of the lowest nonzero coefficient (``-1`` for zero)."""
    for i, c in enumerate(a):
        if c != 0:
            return i
    return -1
