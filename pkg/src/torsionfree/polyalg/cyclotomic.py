"""Chebyshev, cyclotomic, and cosine minimal polynomials.

The minimal polynomial of 2cos(2pi/N) is obtained from the cyclotomic
polynomial Phi_N through the palindromic rewrite

    Phi_N(z) = z^(phi(N)/2) * Psi_N(z + 1/z),      N >= 3,

using the monic shifted-Chebyshev basis V_k (V_k(z + 1/z) = z^k + z^-k,
V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}).  Psi_N is monic with integer
coefficients of degree phi(N)/2, and 2cos(2pi k/N) for gcd(k, N) = 1 are
exactly its roots.
"""

from __future__ import annotations

import functools

from ..errors import PreconditionError
from ..ntheory import is_prime
from .poly import IntPoly

X = IntPoly([0, 1])


def chebyshev_T(n: int) -> IntPoly:
    """Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t); n >= 1."""
    if n < 1:
        raise PreconditionError("chebyshev_T expects n >= 1")
    prev, cur = IntPoly([1]), X
    for _ in range(n - 1):
        prev, cur = cur, 2 * X * cur - prev
    return cur


def _v_basis(upto: int) -> list[IntPoly]:
    """V_0 .. V_upto with V_k(2cos t) = 2cos(k t)."""
    vs = [IntPoly([2]), X]
    while len(vs) <= upto:
        vs.append(X * vs[-1] - vs[-2])
    return vs[: upto + 1]


@functools.cache
def euler_phi_small(n: int) -> int:
    phi = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            phi -= phi // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        phi -= phi // m
    return phi


@functools.cache
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial Phi_n, exact over Z."""
    if n < 1:
        raise PreconditionError("cyclotomic_poly expects n >= 1")
    if n == 1:
        return IntPoly([-1, 1])
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic_poly(d))
    return num


@functools.cache
def minpoly_two_cos_conductor(n: int) -> IntPoly:
    """Minimal polynomial of 2cos(2pi/n) for n >= 3, monic of degree phi(n)/2."""
    if n < 3:
        raise PreconditionError("conductor must be >= 3")
    phi = cyclotomic_poly(n)
    m = phi.degree // 2
    # palindromic: phi coefficients a_k with a_k == a_{deg-k}
    a = phi.coeffs
    vs = _v_basis(m)
    out = IntPoly([a[m]])
    for k in range(1, m + 1):
        out = out + a[m + k] * vs[k]
    if not out.is_monic() or out.degree != m:
        raise AssertionError("cosine minimal polynomial construction failed")
    return out


def minpoly_two_cos(p: int) -> IntPoly:
    """Minimal polynomial of 2cos(2pi/p), p an odd prime; degree (p-1)/2."""
    if p % 2 == 0 or not is_prime(p):
        raise PreconditionError(f"odd prime required, got {p}")
    return minpoly_two_cos_conductor(p)


def minpoly_cos(p: int) -> IntPoly:
    """Minimal polynomial of cos(2pi/p), p an odd prime; content-free, with
    leading coefficient a power of 2."""
    g = minpoly_two_cos(p)
    scaled = g.compose(IntPoly([0, 2]))  # g(2x)
    prim = scaled.primitive()
    lc = prim.lc
    if lc <= 0 or lc & (lc - 1):
        raise AssertionError("leading coefficient is not a power of two")
    return prim
