"""Newton polygons and Hensel lifting over truncated Laurent series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotSimpleResidueRoot, PrecisionExhausted, ZeroPolynomial
from ..models.laurent import LaurentElem


def series_poly(f, var: str = "x", param: str = "t") -> list:
    """Coefficient list ``[a_0, ..., a_d]`` of ``LaurentElem``.

    ``f`` may already be such a list (entries are coerced), or a
    :class:`Polynomial` in ``var`` and ``param`` whose ``param``-part is
    read as an exact Laurent polynomial.
    """
    if isinstance(f, (list, tuple)):
        return [LaurentElem.coerce(c) for c in f]
    cs = f.coeffs_in(var)
    d = max(cs) if cs else -1
    out = []
    for k in range(d + 1):
        c = cs.get(k)
        if c is None:
            out.append(LaurentElem())
            continue
        extra = c.variables() - {param}
        if extra:
            raise ValueError(f"coefficient {c} involves {sorted(extra)}")
        out.append(LaurentElem({e: c.coeff(param, e).constant_value()
                                for e in c.coeffs_in(param)}))
    return out


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower hull of ``(i, v(a_i))``: ``(slope, horizontal length)`` segments
    left to right plus the multiplicity of the root ``x = 0``."""
    segments: tuple
    zero_root_multiplicity: int

    @property
    def degree(self) -> int:
        return self.zero_root_multiplicity + sum(length for _, length in self.segments)

    def root_values(self) -> list:
        """Values of the nonzero roots (with multiplicity), ascending."""
        out = []
        for slope, length in reversed(self.segments):
            out.extend([-slope] * length)
        return out

    def __str__(self):
        lines = [f"slope {s} length {n}" for s, n in self.segments]
        lines.append(f"zero roots {self.zero_root_multiplicity}")
        return "\n".join(lines)


def _lower_hull(points):
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_polygon(f, var: str = "x") -> NewtonPolygon:
    coeffs = series_poly(f, var)
    while coeffs and coeffs[-1].is_exact_zero():
        coeffs.pop()
    if not coeffs or all(c.is_exact_zero() for c in coeffs):
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    if coeffs[-1].is_zero_to_precision():
        raise PrecisionExhausted("leading coefficient is zero to precision")
    low = next(i for i, c in enumerate(coeffs) if not c.is_exact_zero())
    if coeffs[low].is_zero_to_precision():
        raise PrecisionExhausted(f"coefficient of {var}^{low} is zero to precision")
    points = [(i, c.order) for i, c in enumerate(coeffs) if i >= low and c.coeffs]
    hull = _lower_hull(points)
    # an unknown coefficient only matters if it could dip below the hull
    for i, c in enumerate(coeffs):
        if i > low and c.is_zero_to_precision() and not c.is_exact_zero():
            for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
                if x1 < i < x2 and c.prec < y1 + Fraction(y2 - y1, x2 - x1) * (i - x1):
                    raise PrecisionExhausted(f"coefficient of {var}^{i} is zero to precision")
    segments = tuple((Fraction(y2 - y1, x2 - x1), x2 - x1)
                     for (x1, y1), (x2, y2) in zip(hull, hull[1:]))
    return NewtonPolygon(segments, low)


def _eval(coeffs, r):
    acc = LaurentElem()
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _derivative(coeffs):
    return [c * i for i, c in enumerate(coeffs)][1:]


def hensel_lift(f, r0, precision: int, var: str = "x") -> LaurentElem:
    """Root ``r`` of ``f`` with ``r = r0 mod t`` and ``f(r) = 0 mod t^precision``.

    Coefficients must have order ``>= 0`` and be known modulo ``t^precision``;
    ``r0`` must be a simple root of the residue polynomial.
    """
    coeffs = [c.truncate(precision) for c in series_poly(f, var)]
    for c in coeffs:
        if c.coeffs and c.order < 0:
            raise ValueError("coefficients must have nonnegative order")
        if c.prec < precision:
            raise PrecisionExhausted("coefficients are not known to the requested precision")
    r0 = Fraction(r0)
    residue = [c.coeffs.get(0, 0) for c in coeffs]
    val = sum(Fraction(a) * r0 ** i for i, a in enumerate(residue))
    dval = sum(Fraction(a) * i * r0 ** (i - 1) for i, a in enumerate(residue) if i)
    if val != 0 or dval == 0:
        raise NotSimpleResidueRoot(f"{r0} is not a simple root of the residue polynomial")
    r = LaurentElem({0: r0}, precision)
    df = _derivative(coeffs)
    for _ in range(precision + 2):
        fr = _eval(coeffs, r)
        if not fr.coeffs:
            return r
        r = (r - fr * _eval(df, r).inverse()).truncate(precision)
    raise PrecisionExhausted("Newton iteration did not converge")


__all__ = ["NewtonPolygon", "hensel_lift", "newton_polygon", "series_poly"]
