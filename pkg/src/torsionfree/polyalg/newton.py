"""Newton polygons over Q_p.

Convention (fixed here once, used everywhere): a reported slope s of length
l certifies exactly l roots of p-adic valuation s, so positive slopes mean
roots divisible by p. Geometrically s is the negated slope of the lower
convex hull of the points (i, v_p(a_i)); slopes are reported strictly
increasing. The sum of lengths equals the degree, which forces a nonzero
constant term (a root at 0 would have infinite valuation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from ..ntheory import is_prime
from .poly import IntPoly


def padic_valuation(x, p: int) -> int:
    """v_p of a nonzero int or Fraction."""
    fx = Fraction(x)
    if fx == 0:
        raise PreconditionError("v_p(0) is infinite")
    v = 0
    n = fx.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = fx.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class NewtonPolygon:
    p: int
    vertices: tuple[tuple[int, int], ...]  # lower-hull vertices (index, valuation)
    slopes: tuple[tuple[Fraction, int], ...]  # (root valuation, length), increasing

    def single_slope(self) -> Fraction | None:
        if len(self.slopes) == 1:
            return self.slopes[0][0]
        return None


def newton_polygon(f: IntPoly, p: int) -> NewtonPolygon:
    """Newton polygon of f at p; requires f nonzero with f(0) != 0."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if f.is_zero():
        raise PreconditionError("zero polynomial has no Newton polygon")
    if f[0] == 0:
        raise PreconditionError("constant term is zero (root of infinite valuation)")
    points = [(i, padic_valuation(a, p)) for i, a in enumerate(f.coeffs) if a != 0]
    # lower convex hull, left to right (monotone chain on the valuation graph)
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the last vertex lies on or above segment (x1,y1)-(pt)
            if (x2 - x1) * (pt[1] - y1) <= (pt[0] - x1) * (y2 - y1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes: list[tuple[Fraction, int]] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        s = Fraction(-(y2 - y1), x2 - x1)  # root valuation
        slopes.append((s, x2 - x1))
    slopes.sort(key=lambda t: t[0])
    merged: list[tuple[Fraction, int]] = []
    for s, length in slopes:
        if merged and merged[-1][0] == s:
            merged[-1] = (s, merged[-1][1] + length)
        else:
            merged.append((s, length))
    return NewtonPolygon(p=p, vertices=tuple(hull), slopes=tuple(merged))
