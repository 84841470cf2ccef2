"""Pure-Python/numpy fallback for the sieve kernels.

Same contract as the compiled module; see _kernels/__init__.py for the
selection logic. Ranges are half-open [lo, hi).
"""

from __future__ import annotations

from math import isqrt

import numpy as np

IMPLEMENTATION = "pure"

_BLOCK = 1 << 22


def _base_primes(n: int) -> np.ndarray:
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def _prime_segments(lo: int, hi: int):
    """Yield int64 arrays of the primes in [lo, hi), one block at a time."""
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = _base_primes(isqrt(hi - 1))
    for s in range(lo, hi, _BLOCK):
        e = min(s + _BLOCK, hi)
        seg = np.ones(e - s, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= e:
                break
            start = max(p * p, ((s + p - 1) // p) * p)
            if start < e:
                seg[start - s :: p] = False
        yield np.nonzero(seg)[0].astype(np.int64) + s


def prime_count_in_classes(lo: int, hi: int, modulus: int = 1,
                           residues: tuple[int, ...] = ()) -> int:
    """Count primes p in [lo, hi) with p % modulus in residues.

    modulus 1 counts every prime regardless of residues.
    """
    total = 0
    res = np.array(sorted(set(r % modulus for r in residues)), dtype=np.int64)
    for primes in _prime_segments(lo, hi):
        if modulus > 1:
            total += int(np.isin(primes % modulus, res).sum())
        else:
            total += len(primes)
    return total


def prime_count_range(lo: int, hi: int) -> int:
    return prime_count_in_classes(lo, hi, 1, ())


def _root_count_mod_p(coeffs: tuple[int, ...], p: int) -> int:
    """Distinct roots of a monic poly mod p, via deg gcd(x^p - x, f)."""
    d = len(coeffs) - 1
    if d == 1:
        return 1
    f = [c % p for c in coeffs]

    def mulmod(a: list[int], b: list[int]) -> list[int]:
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    prod[k - d + j] = (prod[k - d + j] - c * f[j]) % p
        return prod[:d]

    # x^p mod f by square and multiply
    base = [0, 1] + [0] * (d - 2)
    acc = [1] + [0] * (d - 1)
    e = p
    while e:
        if e & 1:
            acc = mulmod(acc, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    # gcd(x^p - x, f) over F_p
    a = acc
    a[1] = (a[1] - 1) % p
    b = list(f)

    def trim(v: list[int]) -> list[int]:
        while v and v[-1] == 0:
            v.pop()
        return v

    a = trim(a)
    b = trim(b)
    while a:
        # b mod a, with a made monic on the fly
        inv = pow(a[-1], p - 2, p)
        am = [(c * inv) % p for c in a]
        r = list(b)
        while len(r) >= len(am):
            c = r[-1]
            if c:
                off = len(r) - len(am)
                for j in range(len(am)):
                    r[off + j] = (r[off + j] - c * am[j]) % p
            r.pop()
        b = a
        a = trim(r)
    return len(b) - 1 if len(b) > 1 else 0


def poly_root_count_over_primes(coeffs: tuple[int, ...], lo: int, hi: int) -> int:
    """Sum over primes p in [lo, hi) of the number of distinct roots of f
    mod p. f must be monic of degree >= 1."""
    if len(coeffs) < 2 or len(coeffs) > 64:
        raise ValueError("degree out of range")
    if coeffs[-1] != 1:
        raise ValueError("monic polynomial required")
    total = 0
    for primes in _prime_segments(lo, hi):
        for p in primes.tolist():
            total += _root_count_mod_p(coeffs, p)
    return total


def totient_min_violation(limit: int) -> int:
    """Smallest l in [1, limit] with 2*phi(l)^2 < l, or 0 if none."""
    if limit < 1:
        return 0
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # untouched so far: prime
            phi[p::p] -= phi[p::p] // p
    bad = np.nonzero(2 * phi * phi < np.arange(limit + 1, dtype=np.int64))[0]
    bad = bad[bad >= 1]
    return int(bad[0]) if len(bad) else 0
