"""Polynomial factorization over prime fields.

Polynomials mod p are plain lists of ints in [0, p), lowest degree first,
trimmed. The pipeline is squarefree decomposition, then distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting. Randomness comes
from a locally seeded generator so results are reproducible; the factor list
is sorted by (degree, coefficients) regardless. Intended scale: degree up to
a few dozen, p up to about 1e6 (larger p works, just slower).
"""

from __future__ import annotations

import random

from ..errors import PreconditionError
from ..ntheory import is_prime
from .poly import IntPoly

_CZ_SEED = 0x5EED_CA55


def gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_add(a, b, p):
    n = max(len(a), len(b))
    return gf_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gf_sub(a, b, p):
    n = max(len(a), len(b))
    return gf_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return gf_trim([c % p for c in out])


def gf_scale(a, c, p):
    c %= p
    return gf_trim([ai * c % p for ai in a])


def gf_monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return gf_scale(a, inv, p)


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        k = len(a) - len(b)
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                a[k + i] = (a[k + i] - c * bi) % p
        a.pop()
        gf_trim(a)
    return q, a


def gf_mod(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, gf_mod(a, b, p)
    return gf_monic(a, p)


def gf_powmod(a, e: int, f, p):
    result = [1]
    base = gf_mod(a, f, p)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, base, p), f, p)
        base = gf_mod(gf_mul(base, base, p), f, p)
        e >>= 1
    return result


def gf_deriv(a, p):
    return gf_trim([i * c % p for i, c in enumerate(a)][1:])


def _pth_root(a, p):
    # a is a polynomial in x^p over F_p; c^p = c, so just decimate exponents.
    return gf_trim([a[i] for i in range(0, len(a), p)])


def gf_squarefree_parts(f, p):
    """[(g, multiplicity)] with g monic squarefree pairwise coprime and
    f = lc * prod g^multiplicity."""
    f = gf_monic(f, p)
    out: list[tuple[list[int], int]] = []

    def walk(f, mult):
        while len(f) > 1:
            df = gf_deriv(f, p)
            if not df:
                f = _pth_root(f, p)
                mult *= p
                continue
            t = gf_gcd(f, df, p)
            v = gf_divmod(f, t, p)[0]
            k = 0
            while len(v) > 1:
                k += 1
                w = gf_gcd(t, v, p)
                s = gf_divmod(v, w, p)[0]
                if len(s) > 1:
                    out.append((gf_monic(s, p), mult * k))
                v = w
                t = gf_divmod(t, w, p)[0]
            f = t  # leftover is a p-th power (or constant)

    walk(list(f), 1)
    return out


def _distinct_degree(f, p):
    """[(product_of_irreducibles_of_degree_d, d)] for monic squarefree f."""
    out = []
    h = [0, 1]  # x
    fstar = list(f)
    d = 0
    while len(fstar) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_powmod(h, p, fstar, p)
        g = gf_gcd(gf_sub(h, [0, 1], p), fstar, p)
        if len(g) > 1:
            out.append((g, d))
            fstar = gf_divmod(fstar, g, p)[0]
            h = gf_mod(h, fstar, p)
    if len(fstar) > 1:
        out.append((fstar, len(fstar) - 1))
    return out


def _equal_degree(f, d, p, rng):
    """Split monic squarefree f (all irreducible factors of degree d)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = gf_trim(a)
        if len(a) < 1:
            continue
        if p == 2:
            # trace map over GF(2^d)
            cur = gf_mod(list(a), f, p)
            acc = list(cur)
            for _ in range(d - 1):
                cur = gf_mod(gf_mul(cur, cur, p), f, p)
                acc = gf_add(acc, cur, p)
            g = gf_gcd(acc, f, p)
        else:
            g = gf_gcd(a, f, p)  # lucky split if a shares a factor
            if not 1 < len(g) < len(f):
                b = gf_powmod(a, (p**d - 1) // 2, f, p)
                g = gf_gcd(gf_sub(b, [1], p), f, p)
        if 1 < len(g) < len(f):
            rest = gf_divmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(rest, d, p, rng)


def factor_mod_p(f: IntPoly, p: int) -> list[tuple[IntPoly, int]]:
    """Full factorization of f mod p as [(monic irreducible factor, mult)].

    The product of the factors times (lc(f) mod p) reproduces f mod p.
    Factors are IntPoly with coefficients in [0, p), sorted by (degree,
    coefficient tuple).
    """
    if not is_prime(p):
        raise PreconditionError(f"modulus {p} is not prime")
    fp = gf_trim([c % p for c in f.coeffs])
    if not fp:
        raise PreconditionError("polynomial vanishes mod p")
    if len(fp) == 1:
        return []
    rng = random.Random(_CZ_SEED ^ (p << 1) ^ len(fp))
    factors: list[tuple[list[int], int]] = []
    for g, mult in gf_squarefree_parts(fp, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda t: (len(t[0]), tuple(reversed(t[0]))))
    return [(IntPoly(g), m) for g, m in factors]


def roots_mod_p(f: IntPoly, p: int) -> list[int]:
    """Distinct roots of f mod p (exhaustive for small p, gcd-based above)."""
    fp = gf_trim([c % p for c in f.coeffs])
    if not fp:
        raise PreconditionError("polynomial vanishes mod p")
    if p <= 50:
        return [r for r in range(p) if _eval_mod(fp, r, p) == 0]
    xp = gf_powmod([0, 1], p, fp, p)
    g = gf_gcd(gf_sub(xp, [0, 1], p), fp, p)
    out = []
    for (lin, _m) in factor_mod_p(IntPoly(g), p):
        if lin.degree == 1:
            out.append((-lin[0]) % p)
    return sorted(out)


def _eval_mod(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
