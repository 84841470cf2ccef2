"""Exact real root isolation via Sturm sequences and rational bisection.

Intervals are closed [lo, hi] with Fraction endpoints. A degenerate interval
lo == hi marks an exact rational root. For a squarefree input the returned
intervals are pairwise disjoint, ascending, each of width at most the
requested precision, and each contains exactly one real root. All sign
evaluations are exact rational arithmetic; floats never decide anything here.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotSquarefreeError, PreconditionError
from .poly import IntPoly, is_squarefree, poly_gcd

Interval = tuple[Fraction, Fraction]


def sturm_sequence(f: IntPoly) -> list[IntPoly]:
    """Sturm chain of f; remainders are scaled to primitive integer
    polynomials (positive scaling preserves the sign variation count)."""
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        _, r = seq[-2].pseudo_divmod(seq[-1])
        # pseudo remainder = lc^k * true remainder; fix the sign when lc < 0
        # and the multiplier power is odd
        k = seq[-2].degree - seq[-1].degree + 1
        if seq[-1].lc < 0 and k % 2:
            r = -r
        r = -r.primitive()
        if r.is_zero():
            break
        seq.append(r)
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _sign_variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(seq, x: Fraction) -> int:
    return _sign_variations(p(x) for p in seq)


def _variations_at_inf(seq, positive: bool) -> int:
    vals = []
    for p in seq:
        s = p.lc
        if not positive and p.degree % 2:
            s = -s
        vals.append(s)
    return _sign_variations(vals)


def root_bound(f: IntPoly) -> int:
    """Cauchy bound: all real roots lie strictly inside [-B, B]."""
    if f.degree < 1:
        raise PreconditionError("root bound needs degree >= 1")
    lc = abs(f.lc)
    m = max(abs(a) for a in f.coeffs[:-1]) if f.degree else 0
    return 1 + (m + lc - 1) // lc + 1


def count_roots_in(seq, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def isolate_real_roots(f: IntPoly, precision: Fraction = Fraction(1, 2**20)) -> list[Interval]:
    """Isolating intervals for all real roots of squarefree f, ascending."""
    if f.degree < 0:
        raise PreconditionError("zero polynomial has no isolated roots")
    if f.degree == 0:
        return []
    if not is_squarefree(f):
        raise NotSquarefreeError("input polynomial has repeated roots")
    if precision <= 0:
        raise PreconditionError("precision must be positive")
    if f.degree == 1:
        r = Fraction(-f[0], f[1])
        return [(r, r)]
    seq = sturm_sequence(f)
    bound = root_bound(f)
    out: list[Interval] = []

    def emit_exact(r: Fraction):
        out.append((r, r))

    def refine(lo: Fraction, hi: Fraction, flo: Fraction, fhi: Fraction):
        # exactly one root in (lo, hi), f(lo) f(hi) < 0
        while hi - lo > precision:
            mid = (lo + hi) / 2
            fm = f(mid)
            if fm == 0:
                emit_exact(mid)
                return
            if (flo < 0) != (fm < 0):
                hi, fhi = mid, fm
            else:
                lo, flo = mid, fm
        out.append((lo, hi))

    def split(lo: Fraction, hi: Fraction, n: int):
        if n == 0:
            return
        flo, fhi = f(lo), f(hi)
        if n == 1 and flo != 0 and fhi != 0 and (flo < 0) != (fhi < 0):
            refine(lo, hi, flo, fhi)
            return
        mid = (lo + hi) / 2
        fm = f(mid)
        at_mid = 1 if fm == 0 else 0
        n_left = count_roots_in(seq, lo, mid) - at_mid
        n_right = n - n_left - at_mid
        split(lo, mid, n_left)
        if at_mid:
            emit_exact(mid)
        split(mid, hi, n_right)

    lo, hi = Fraction(-bound), Fraction(bound)
    total = count_roots_in(seq, lo, hi)
    split(lo, hi, total)
    out.sort(key=lambda iv: iv[0])
    return out


def refine_interval(f: IntPoly, iv: Interval, width: Fraction) -> Interval:
    """Shrink an isolating interval of squarefree f to the given width."""
    lo, hi = iv
    if lo == hi:
        return iv
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return (lo, lo)
    if fhi == 0:
        return (hi, hi)
    if (flo < 0) == (fhi < 0):
        raise PreconditionError("not an isolating interval (no sign change)")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return (mid, mid)
        if (flo < 0) != (fm < 0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return (lo, hi)


def sign_at_root(f: IntPoly, iv: Interval, g_coeffs) -> int:
    """Exact sign of g at the unique root r of f inside iv; requires g(r) != 0.

    g is given as rational coefficients (any iterable accepted by Fraction).
    The interval is bisected until g provably has constant nonzero sign on it:
    both endpoint signs agree and a Sturm count certifies g has no root inside.
    """
    from .poly import clear_denominators

    lo, hi = iv
    g_int, _den = clear_denominators([Fraction(c) for c in g_coeffs])
    if g_int.is_zero():
        raise PreconditionError("zero polynomial has no sign")
    if lo == hi:
        v = g_int(lo)
        if v == 0:
            raise PreconditionError("polynomial vanishes at the root")
        return 1 if v > 0 else -1
    gsf = g_int.exact_div(poly_gcd(g_int, g_int.derivative())) if g_int.degree > 0 else g_int
    gseq = sturm_sequence(gsf) if gsf.degree > 0 else None
    flo = f(lo)
    if flo == 0:
        raise PreconditionError("endpoint is a root; pass a degenerate interval")
    while True:
        vlo, vhi = g_int(lo), g_int(hi)
        if vlo != 0 and vhi != 0 and (vlo > 0) == (vhi > 0):
            if gseq is None or count_roots_in(gseq, lo, hi) == 0:
                return 1 if vlo > 0 else -1
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            v = g_int(mid)
            if v == 0:
                raise PreconditionError("polynomial vanishes at the root")
            return 1 if v > 0 else -1
        if (flo < 0) != (fm < 0):
            hi = mid
        else:
            lo, flo = mid, fm


def compare_root(f: IntPoly, iv: Interval, q: Fraction) -> int:
    """Sign of (root - q) for the unique root of squarefree f inside iv.

    Returns +1 if the root exceeds q, -1 if it is below, 0 if the root is
    exactly the rational q.
    """
    lo, hi = iv
    q = Fraction(q)
    if lo == hi:
        return (lo > q) - (lo < q)
    if f(q) == 0 and lo <= q <= hi:
        return 0
    flo = f(lo)
    while lo < q < hi:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            # mid is the root; compare directly
            return (mid > q) - (mid < q)
        if (flo < 0) != (fm < 0):
            hi = mid
        else:
            lo, flo = mid, fm
    if q <= lo:
        return 1
    return -1
