# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve kernels. Same contract as pure.py; half-open ranges."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

IMPLEMENTATION = "compiled"

DEF BLOCK = 4194304  # 1 << 22
DEF MAXDEG = 64

cdef long long _isqrt(long long n):
    cdef long long x = <long long> (n ** 0.5)
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


cdef long long* _base_primes(long long n, Py_ssize_t* count) except NULL:
    """Primes <= n, malloc'd; caller frees."""
    cdef unsigned char* sieve
    cdef long long i, j, cap
    cdef long long* out
    cdef Py_ssize_t k = 0
    if n < 2:
        count[0] = 0
        out = <long long*> malloc(sizeof(long long))
        if out == NULL:
            raise MemoryError()
        return out
    sieve = <unsigned char*> malloc(n + 1)
    if sieve == NULL:
        raise MemoryError()
    memset(sieve, 1, n + 1)
    sieve[0] = 0
    sieve[1] = 0
    i = 2
    while i * i <= n:
        if sieve[i]:
            j = i * i
            while j <= n:
                sieve[j] = 0
                j += i
        i += 1
    cap = 0
    for i in range(2, n + 1):
        cap += sieve[i]
    out = <long long*> malloc(cap * sizeof(long long) + sizeof(long long))
    if out == NULL:
        free(sieve)
        raise MemoryError()
    for i in range(2, n + 1):
        if sieve[i]:
            out[k] = i
            k += 1
    free(sieve)
    count[0] = k
    return out


def prime_count_in_classes(long long lo, long long hi, long long modulus=1,
                           residues=()):
    """Count primes p in [lo, hi) with p % modulus in residues.

    modulus 1 counts every prime regardless of residues.
    """
    cdef long long total = 0, s, e, p, start, i, v
    cdef Py_ssize_t nbase = 0, bi
    cdef long long* base = NULL
    cdef unsigned char* seg = NULL
    cdef unsigned char* resflag = NULL
    if lo < 2:
        lo = 2
    if hi <= lo:
        return 0
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if modulus > (1 << 24):
        raise ValueError("modulus too large")
    if modulus > 1:
        resflag = <unsigned char*> malloc(modulus)
        if resflag == NULL:
            raise MemoryError()
        memset(resflag, 0, modulus)
        for r in residues:
            v = (<long long> r) % modulus
            if v < 0:
                v += modulus
            resflag[v] = 1
    base = _base_primes(_isqrt(hi - 1), &nbase)
    seg = <unsigned char*> malloc(BLOCK)
    if seg == NULL:
        free(base)
        if resflag != NULL:
            free(resflag)
        raise MemoryError()
    try:
        s = lo
        while s < hi:
            e = s + BLOCK
            if e > hi:
                e = hi
            memset(seg, 1, e - s)
            for bi in range(nbase):
                p = base[bi]
                if p * p >= e:
                    break
                start = p * p
                if start < s:
                    start = ((s + p - 1) // p) * p
                i = start - s
                while i < e - s:
                    seg[i] = 0
                    i += p
            if modulus > 1:
                for i in range(e - s):
                    if seg[i]:
                        v = s + i
                        if resflag[v % modulus]:
                            total += 1
            else:
                for i in range(e - s):
                    total += seg[i]
            s = e
    finally:
        free(seg)
        free(base)
        if resflag != NULL:
            free(resflag)
    return total


def prime_count_range(long long lo, long long hi):
    return prime_count_in_classes(lo, hi, 1, ())


cdef void _mulmod(long long* a, long long* b, long long* out, long long* f,
                  int d, long long p, long long* tmp):
    """out = a*b mod (f, p); a, b, out of length d; f monic, length d+1."""
    cdef int i, j, k
    cdef long long c
    for k in range(2 * d - 1):
        tmp[k] = 0
    for i in range(d):
        if a[i]:
            for j in range(d):
                tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % p
    for k in range(2 * d - 2, d - 1, -1):
        c = tmp[k]
        if c:
            tmp[k] = 0
            for j in range(d):
                tmp[k - d + j] = (tmp[k - d + j] - c * f[j]) % p
                if tmp[k - d + j] < 0:
                    tmp[k - d + j] += p
    for k in range(d):
        out[k] = tmp[k]


cdef long long _inv_mod(long long a, long long p):
    # extended euclid; a nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, h
    while newr:
        q = r // newr
        h = t - q * newt
        t = newt
        newt = h
        h = r - q * newr
        r = newr
        newr = h
    if t < 0:
        t += p
    return t


cdef int _root_count_mod_p(long long* coeffs, int d, long long p):
    """Distinct roots mod p of monic poly with given coefficient residues."""
    cdef long long f[MAXDEG + 1]
    cdef long long acc[MAXDEG]
    cdef long long base[MAXDEG]
    cdef long long swap_[MAXDEG]
    cdef long long tmp[2 * MAXDEG]
    cdef long long a[MAXDEG + 1]
    cdef long long b[MAXDEG + 1]
    cdef long long e, c, inv
    cdef int i, j, la, lb, off
    if d == 1:
        return 1
    for i in range(d + 1):
        f[i] = coeffs[i]
    for i in range(d):
        acc[i] = 0
        base[i] = 0
    acc[0] = 1
    base[1] = 1
    e = p
    while e:
        if e & 1:
            _mulmod(acc, base, acc, f, d, p, tmp)
        e >>= 1
        if e:
            _mulmod(base, base, swap_, f, d, p, tmp)
            for i in range(d):
                base[i] = swap_[i]
    # a = x^p - x mod f; b = f
    for i in range(d):
        a[i] = acc[i]
    a[1] = (a[1] - 1) % p
    if a[1] < 0:
        a[1] += p
    la = d
    while la > 0 and a[la - 1] == 0:
        la -= 1
    for i in range(d + 1):
        b[i] = f[i]
    lb = d + 1
    # euclidean gcd; la, lb are lengths (degree + 1), 0 means zero poly
    while la > 0:
        inv = _inv_mod(a[la - 1], p)
        for i in range(la):
            a[i] = (a[i] * inv) % p
        while lb >= la:
            c = b[lb - 1]
            if c:
                off = lb - la
                for j in range(la):
                    b[off + j] = (b[off + j] - c * a[j]) % p
                    if b[off + j] < 0:
                        b[off + j] += p
            lb -= 1
        while lb > 0 and b[lb - 1] == 0:
            lb -= 1
        for i in range(la if la > lb else lb):
            c = a[i] if i < la else 0
            a[i] = b[i] if i < lb else 0
            b[i] = c
        i = la
        la = lb
        lb = i
    return lb - 1 if lb > 1 else 0


def poly_root_count_over_primes(coeffs, long long lo, long long hi):
    """Sum over primes p in [lo, hi) of the number of distinct roots of f
    mod p. f must be monic of degree 1..63 with coefficients < 2^62."""
    cdef long long cf[MAXDEG + 1]
    cdef long long red[MAXDEG + 1]
    cdef int d = len(coeffs) - 1, i
    cdef long long total = 0, s, e, p, start, idx
    cdef Py_ssize_t nbase = 0, bi
    cdef long long* base = NULL
    cdef unsigned char* seg = NULL
    if d < 1 or d >= MAXDEG:
        raise ValueError("degree out of range")
    if coeffs[d] != 1:
        raise ValueError("monic polynomial required")
    if hi > (<long long> 1) << 31:
        raise ValueError("range cap: primes must be < 2^31")
    for i in range(d + 1):
        v = int(coeffs[i])
        if v.bit_length() >= 62:
            raise ValueError("coefficient too large for compiled kernel")
        cf[i] = v
    if lo < 2:
        lo = 2
    if hi <= lo:
        return 0
    base = _base_primes(_isqrt(hi - 1), &nbase)
    seg = <unsigned char*> malloc(BLOCK)
    if seg == NULL:
        free(base)
        raise MemoryError()
    try:
        s = lo
        while s < hi:
            e = s + BLOCK
            if e > hi:
                e = hi
            memset(seg, 1, e - s)
            for bi in range(nbase):
                p = base[bi]
                if p * p >= e:
                    break
                start = p * p
                if start < s:
                    start = ((s + p - 1) // p) * p
                idx = start - s
                while idx < e - s:
                    seg[idx] = 0
                    idx += p
            for idx in range(e - s):
                if seg[idx]:
                    p = s + idx
                    for i in range(d + 1):
                        red[i] = cf[i] % p
                        if red[i] < 0:
                            red[i] += p
                    total += _root_count_mod_p(red, d, p)
            s = e
    finally:
        free(seg)
        free(base)
    return total


def totient_min_violation(long long limit):
    """Smallest l in [1, limit] with 2*phi(l)^2 < l, or 0 if none."""
    cdef long long* phi
    cdef long long i, j, ans = 0
    if limit < 1:
        return 0
    phi = <long long*> malloc((limit + 1) * sizeof(long long))
    if phi == NULL:
        raise MemoryError()
    try:
        for i in range(limit + 1):
            phi[i] = i
        for i in range(2, limit + 1):
            if phi[i] == i:
                j = i
                while j <= limit:
                    phi[j] -= phi[j] // i
                    j += i
        for i in range(1, limit + 1):
            if 2 * phi[i] * phi[i] < i:
                ans = i
                break
    finally:
        free(phi)
    return ans
