"""Lattices in SO(2,1) with an order-p rotation and small volume.

The data is a ternary form x^2 + y^2 - c z^2 over Q(cos 2pi/p) with
c = T + cos(2pi/p) for a dyadic rational T. The interval condition on T
makes the form have signature (2,1) at exactly one real place, the 2-adic
condition (odd valuation of c at every place over 2, certified by a single
Newton-polygon slope) blocks isotropy at 2, and the rotation

    M = [[0, -1], [1, 2w]],  w = cos(2pi/p)

is an exact isometry of the binary block [[1, w], [w, 1]] of order p.
Everything a returned construction claims is checked in exact arithmetic;
floating point only guides nothing here at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from mpmath import mp, mpf, workdps

from .errors import PreconditionError, ResourceCapError, TorsionfreeError
from .ntheory import is_prime, primes_in_range
from .numfield import (FieldElement, NumberField, _dedekind_index_test,
                       element_charpoly, make_cosine_field, sign_at_embeddings)
from .polyalg import (clear_denominators, compare_root, discriminant,
                      isolate_real_roots, minpoly_two_cos,
                      minpoly_two_cos_conductor, newton_polygon)
from .report import mpf_str

PROBE_K_CAP = 20
PROBE_CANDIDATE_BITS = 30

CHECK_NAMES = ("interval_ok", "archimedean_ok", "two_adic_ok",
               "form_preserved", "order_verified")


@dataclass(frozen=True)
class LatticeConstruction:
    p: int
    field: NumberField
    T: Fraction
    c: FieldElement
    gram: tuple
    generator: tuple
    checks: dict
    disc_used: int
    log_volume_estimate: object

    def all_checks_pass(self) -> bool:
        return all(self.checks[name] for name in CHECK_NAMES)

    def to_json(self) -> dict:
        with workdps(30):
            formula = mpf(self.p) ** (mpf(self.p - 2) / 2)
        exponent_matches = self.disc_used == self.p ** ((self.p - 3) // 2)
        discrepancies = [
            "published discriminant formula p^((p-2)/2) = "
            f"{mpf_str(formula)} differs from the computed field "
            f"discriminant {self.disc_used} = p^((p-3)/2)",
            "the shifted cosine is negative at every non-identity real "
            "embedding (definiteness needs that sign); the published sign "
            "sentence asserts positivity and is recorded, not implemented",
            "odd valuation over 2 is certified by the Newton slope, but the "
            "published inference from it to 2-adic anisotropy is unproven; "
            "the isotropy probe gathers evidence per p and has found "
            "primitive solutions mod 2^k for small p",
        ]
        return {
            "p": self.p,
            "field": self.field.to_json(),
            "T": str(self.T),
            "c": _element_json(self.c),
            "gram": [[_element_json(e) for e in row] for row in self.gram],
            "generator": [[_element_json(e) for e in row]
                          for row in self.generator],
            "checks": {name: self.checks[name] for name in CHECK_NAMES},
            "disc_used": str(self.disc_used),
            "disc_published_formula": mpf_str(formula),
            "disc_matches_published_formula": (
                (self.p - 2) % 2 == 0
                and self.disc_used == self.p ** ((self.p - 2) // 2)),
            "disc_matches_observed_exponent": exponent_matches,
            "log_volume_estimate": mpf_str(self.log_volume_estimate),
            "lower_bound_ratio": mpf_str(
                lower_bound_ratio(self.p, self.log_volume_estimate)),
            "paper_discrepancies": discrepancies,
        }


def _element_json(e: FieldElement) -> list[str]:
    return [str(fr) for fr in e.rep]


def _require_construction_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise PreconditionError("p must be an odd prime >= 5")


@lru_cache(maxsize=None)
def _interval_data(p: int):
    fp = minpoly_two_cos(p)
    f2p = minpoly_two_cos_conductor(2 * p)
    ivp = isolate_real_roots(fp)[-1]     # 2cos(2pi/p), the largest root
    iv2 = isolate_real_roots(f2p)[-2]    # 2cos(3pi/p), the second largest
    return fp, ivp, f2p, iv2


def interval_certificate(p: int, T) -> bool:
    """Exact certificate that 2cos(3pi/p) < -2T < 2cos(2pi/p)."""
    _require_construction_prime(p)
    q = Fraction(-2) * Fraction(T)
    fp, ivp, f2p, iv2 = _interval_data(p)
    return compare_root(f2p, iv2, q) == -1 and compare_root(fp, ivp, q) == 1


def two_adic_condition(c: FieldElement) -> bool:
    """Odd valuation of c at every place over 2, all at once.

    The Newton polygon at 2 of the characteristic polynomial must be a
    single segment whose slope is an odd integer. Stricter than needed
    (slopes could differ per place and still all be odd) but it avoids
    any prime-by-prime valuation machinery.
    """
    if c.is_zero():
        raise PreconditionError("c must be nonzero")
    cleared, _den = clear_denominators(element_charpoly(c))
    s = newton_polygon(cleared, 2).single_slope()
    return s is not None and s.denominator == 1 and int(s) % 2 == 1


def archimedean_check(c: FieldElement) -> tuple[int, tuple[int, ...]]:
    """Sign of c at the identity embedding (the one taking the generator
    to its largest real value) and at every other embedding."""
    signs = sign_at_embeddings(c)
    return signs[-1], tuple(signs[:-1])


def archimedean_ok(c: FieldElement) -> bool:
    ident, others = archimedean_check(c)
    return ident == 1 and all(s == -1 for s in others)


def choose_T(p: int, denominator_cap: int = 1024,
             field: NumberField | None = None) -> Fraction:
    """First T = a/2^j (j ascending, then |a| ascending, + before -) inside
    the cosine interval that also passes the 2-adic test."""
    _require_construction_prime(p)
    if denominator_cap < 1 or denominator_cap & (denominator_cap - 1):
        raise PreconditionError("denominator_cap must be a power of 2")
    if field is None:
        field = make_cosine_field(p)
    half = Fraction(1, 2)
    for j in range(denominator_cap.bit_length()):
        den = 1 << j
        a = 1
        while a < den:   # |T| < 1 always, the interval lies in (-1, 1)
            for sign in (1, -1):
                T = Fraction(sign * a, den)
                if interval_certificate(p, T) and \
                        two_adic_condition(field.element([T, half])):
                    return T
            a += 2
    raise ResourceCapError(
        f"no feasible T with denominator <= {denominator_cap} for p = {p}")


# ---------------------------------------------------------------- isometry

def order_p_element(p: int, field: NumberField):
    """g = blockdiag([[0, -1], [1, 2w]], 1), an order-p isometry of the
    construction's gram matrix with entries in Z[2w]."""
    if not is_prime(p) or p == 2:
        raise PreconditionError("p must be an odd prime")
    if field.defining_poly != minpoly_two_cos(p):
        raise PreconditionError("field must be generated by 2cos(2pi/p)")
    zero, one = field.element([0]), field.element([1])
    theta = field.generator()
    return ((zero, -one, zero),
            (one, theta, zero),
            (zero, zero, one))


def _mat_mul(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = A[i][0] * B[0][j]
            for k in range(1, n):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _identity(field: NumberField, n: int = 3):
    zero, one = field.element([0]), field.element([1])
    return tuple(tuple(one if i == j else zero for j in range(n))
                 for i in range(n))


def _mat_pow(A, e: int, field: NumberField):
    out = _identity(field, len(A))
    base = A
    while e:
        if e & 1:
            out = _mat_mul(out, base)
        e >>= 1
        if e:
            base = _mat_mul(base, base)
    return out


def _det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    raise PreconditionError("determinant implemented for n <= 3")


def verify_order(g, p: int) -> bool:
    """g^p = I and g != I, in exact field arithmetic; p prime makes the
    pair of checks decide the order."""
    if not is_prime(p):
        raise PreconditionError("p must be prime")
    field = g[0][0].owner
    ident = _identity(field, len(g))
    return g != ident and _mat_pow(g, p, field) == ident


def form_preservation_check(g, gram) -> bool:
    if len(g) != len(gram):
        raise PreconditionError("shape mismatch")
    n = len(g)
    gt = tuple(tuple(g[i][j] for i in range(n)) for j in range(n))
    field = g[0][0].owner
    return (_mat_mul(_mat_mul(gt, gram), g) == gram
            and _det(g) == field.element([1]))


# ------------------------------------------------------------------ volume

@lru_cache(maxsize=None)
def cosine_field_disc(p: int) -> int:
    """Exact field discriminant of Q(2cos(2pi/p)), certified cheaply.

    The polynomial discriminant is a power of p alone, so one Dedekind
    index test at p settles monogenicity; no real-root isolation, which
    matters once the sweep reaches degree 48.
    """
    _require_construction_prime(p)
    f = minpoly_two_cos(p)
    dp = discriminant(f)
    m, k = abs(dp), 0
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        field = make_cosine_field(p)
        if field.field_disc is None:
            raise PreconditionError("field discriminant not certified")
        return field.field_disc
    if k >= 2 and not _dedekind_index_test(f, p):
        raise PreconditionError(
            "index divisible by p; polynomial discriminant is not the "
            "field discriminant")
    return dp


def volume_estimate(p: int, a_const, b_const, plogp_c=1.0):
    """(disc_computed, published-formula value p^((p-2)/2), log v_hat) with
    log v_hat = log a + b log disc. Enforces log disc <= plogp_c * p log p."""
    if a_const <= 0 or b_const <= 0:
        raise PreconditionError("volume constants must be positive")
    disc = cosine_field_disc(p)
    with workdps(30):
        formula = mpf(p) ** (mpf(p - 2) / 2)
        log_disc = mp.log(mpf(disc))
        if log_disc > mpf(plogp_c) * p * mp.log(p):
            raise TorsionfreeError(
                f"log disc exceeds {plogp_c} * p log p at p = {p}")
        log_v_hat = mp.log(mpf(a_const)) + mpf(b_const) * log_disc
    return disc, formula, log_v_hat


def lower_bound_ratio(p: int, log_v_hat):
    """p log(log v) / log v: the index lower bound exhibited at volume v."""
    with workdps(30):
        lv = mpf(log_v_hat)
        if lv <= 1:
            raise PreconditionError("need log_v_hat > 1")
        return mpf(p) * mp.log(lv) / lv


# ------------------------------------------------------------------- probe

def mod2k_isotropy_probe(c: FieldElement, k: int) -> list:
    """All primitive triples with x^2 + y^2 = c z^2 mod 2^k.

    Falsification probe: coordinates run over polynomials in the generator
    of degree < d with coefficients mod 2^k, primitive meaning not every
    coefficient even. Empty output for growing k is evidence for 2-adic
    anisotropy; any hit at large k flags the construction.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if k > PROBE_K_CAP:
        raise ResourceCapError(f"probe capped at k <= {PROBE_K_CAP}")
    if c.is_zero():
        raise PreconditionError("c must be nonzero")
    K = c.owner
    d = K.degree
    bits = 3 * d * k
    if bits > PROBE_CANDIDATE_BITS:
        raise ResourceCapError(
            f"2^{bits} candidate triples exceed the 2^{PROBE_CANDIDATE_BITS} "
            "search guard")
    mod = 1 << k
    dens = [fr.denominator for fr in c.rep]
    if any(den & (den - 1) for den in dens):
        raise PreconditionError("c must have power-of-two denominators")
    m = max(den.bit_length() - 1 for den in dens)
    t = (m + 1) // 2   # c * 4^t is integral and in the square class of c
    cc = tuple(int(fr * 4 ** t) % mod for fr in c.rep)
    fm = [co % mod for co in K.defining_poly.coeffs]

    def pmul(u, v):
        prod = [0] * (2 * d - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    prod[i + j] = (prod[i + j] + ui * vj) % mod
        for i in range(len(prod) - 1, d - 1, -1):
            ci = prod[i]
            if ci:
                prod[i] = 0
                for j in range(d):
                    prod[i - d + j] = (prod[i - d + j] - ci * fm[j]) % mod
        return tuple(prod[:d])

    coords = list(product(range(mod), repeat=d))
    squares = [pmul(u, u) for u in coords]
    sums: dict[tuple, list] = {}
    for x, sx in zip(coords, squares):
        for y, sy in zip(coords, squares):
            key = tuple((a + b) % mod for a, b in zip(sx, sy))
            sums.setdefault(key, []).append((x, y))
    out = []
    for z, sz in zip(coords, squares):
        target = pmul(cc, sz)
        for x, y in sums.get(target, ()):
            if any(v & 1 for v in x + y + z):
                out.append((x, y, z))
    return out


# ------------------------------------------------------------ full pipeline

def build_construction(p: int, denominator_cap: int = 1024,
                       a_const=1.0, b_const=1.0,
                       plogp_c=1.0) -> LatticeConstruction:
    _require_construction_prime(p)
    field = make_cosine_field(p)
    T = choose_T(p, denominator_cap, field=field)
    half = Fraction(1, 2)
    omega = field.element([0, half])
    c = field.element([T, half])
    zero, one = field.element([0]), field.element([1])
    gram = ((one, omega, zero),
            (omega, one, zero),
            (zero, zero, -c))
    g = order_p_element(p, field)
    checks = {
        "interval_ok": interval_certificate(p, T),
        "archimedean_ok": archimedean_ok(c),
        "two_adic_ok": two_adic_condition(c),
        "form_preserved": form_preservation_check(g, gram),
        "order_verified": verify_order(g, p),
    }
    disc, _formula, log_v_hat = volume_estimate(p, a_const, b_const, plogp_c)
    if field.field_disc is not None and field.field_disc != disc:
        raise TorsionfreeError("discriminant routes disagree")
    return LatticeConstruction(p=p, field=field, T=T, c=c, gram=gram,
                               generator=g, checks=checks, disc_used=disc,
                               log_volume_estimate=log_v_hat)


def sweep(pmax: int, a_const=1.0, b_const=1.0, plogp_c=1.0) -> list:
    """(p, disc, log_v_hat, ratio) for every prime 5 <= p <= pmax, on the
    cheap certified-discriminant route (no T search, no root isolation)."""
    if pmax < 5:
        raise PreconditionError("pmax must be >= 5")
    rows = []
    for p in primes_in_range(5, pmax + 1):
        disc, _formula, log_v_hat = volume_estimate(p, a_const, b_const,
                                                    plogp_c)
        rows.append((p, disc, log_v_hat, lower_bound_ratio(p, log_v_hat)))
    return rows
