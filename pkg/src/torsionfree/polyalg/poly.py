"""Dense integer polynomials with exact arithmetic.

Representation: a polynomial is an IntPoly wrapping a tuple of Python ints,
lowest degree first, with no trailing zeros; the zero polynomial is the
empty tuple. All operations are exact. Resultants use the primitive
pseudo-remainder sequence with exact rational bookkeeping, so no floating
point enters any algebraic result.

Rational-coefficient polynomials appear only transiently (characteristic
polynomials, Sturm data); they are plain tuples of Fraction handled by the
q_* helpers at the bottom.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import PreconditionError


def _trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable dense polynomial over Z, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        for a in coeffs:
            if not isinstance(a, int):
                raise PreconditionError(f"integer coefficient expected, got {a!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        # indexing past the degree reads as 0, so iteration must stop itself
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                parts.append(str(a))
            else:
                mon = "x" if i == 1 else f"x^{i}"
                if a == 1:
                    parts.append(mon)
                elif a == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{a}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise PreconditionError("negative polynomial power")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- evaluation and calculus ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, works for mpf too."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * a for i, a in enumerate(self.coeffs)][1:])

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + IntPoly([a])
        return acc

    # -- content and divisibility ------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for a in self.coeffs:
            g = math.gcd(g, a)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with the sign of the leading coefficient kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly([a // g for a in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def pseudo_divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Pseudo division: lc(other)^(da-db+1) * self = q*other + r."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo division by zero polynomial")
        da, db = self.degree, other.degree
        if da < db:
            return IntPoly(), self
        lc_b = other.lc
        rem = list(self.coeffs)
        quo = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            # scale remaining dividend, then cancel the top term
            for i in range(k + db):
                rem[i] *= lc_b
            for i in range(len(quo)):
                quo[i] *= lc_b
            coef = rem[k + db]
            quo[k] = coef
            rem[k + db] = 0
            for i, b in enumerate(other.coeffs[:-1]):
                rem[k + i] -= coef * b
        return IntPoly(quo), IntPoly(rem)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient over Z; raises if the division is not exact."""
        q, r = q_divmod(q_from_int(self), q_from_int(other))
        if any(r) or any(c.denominator != 1 for c in q):
            raise PreconditionError("non-exact polynomial division")
        return IntPoly([int(c) for c in q])


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over Z (positive leading coefficient)."""
    a, b = f.primitive(), g.primitive()
    if a.is_zero():
        c = b
    elif b.is_zero():
        c = a
    else:
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            _, r = a.pseudo_divmod(b)
            a, b = b, r.primitive()
        c = a
    if c.lc < 0:
        c = -c
    return c


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) over Z, exact (primitive PRS with rational bookkeeping)."""
    if f.is_zero() or g.is_zero():
        return 0
    a, b = f, g
    acc = Fraction(1)
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            acc = -acc
        a, b = b, a
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            val = acc * Fraction(b.lc) ** m
            break
        _, r = a.pseudo_divmod(b)
        if r.is_zero():
            return 0
        cont = r.content()
        rp = IntPoly([c // cont for c in r.coeffs])
        # Res(a,b) = (-1)^(mn) lc(b)^(m - deg r - n(m-n+1)) cont^n Res(b, rp)
        if (m * n) % 2:
            acc = -acc
        acc *= Fraction(b.lc) ** (m - r.degree - n * (m - n + 1))
        acc *= Fraction(cont) ** n
        a, b = b, rp
    if val.denominator != 1:
        raise AssertionError("resultant bookkeeping produced a non-integer")
    return int(val)


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); degree 1 gives 1."""
    d = f.degree
    if d < 1:
        raise PreconditionError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    res = resultant(f, f.derivative())
    if res % f.lc:
        raise AssertionError("Res(f, f') not divisible by lc(f)")
    return sign * (res // f.lc)


def is_squarefree(f: IntPoly) -> bool:
    if f.degree < 1:
        return not f.is_zero()
    return poly_gcd(f, f.derivative()).degree == 0


# -- rational-coefficient helpers (plain tuples of Fraction) ----------------


def q_trim(coeffs) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def q_from_int(f: IntPoly) -> tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in f.coeffs)


def q_eval(coeffs, x):
    acc = Fraction(0) if not isinstance(x, float) else 0.0
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def q_divmod(a, b) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    a, b = list(q_trim(a)), q_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lc = 1 / b[-1]
    while len(a) >= len(b):
        coef = a[-1] * inv_lc
        k = len(a) - len(b)
        q[k] = coef
        for i, bi in enumerate(b):
            a[k + i] -= coef * bi
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return tuple(q), q_trim(a)


def clear_denominators(coeffs) -> tuple[IntPoly, int]:
    """(integer polynomial, positive denominator) with poly/den equal to the
    input as rational polynomials; den is the lcm of coefficient denominators."""
    c = q_trim(coeffs)
    if not c:
        return IntPoly(), 1
    den = 1
    for a in c:
        den = den * a.denominator // math.gcd(den, a.denominator)
    return IntPoly([int(a * den) for a in c]), den
