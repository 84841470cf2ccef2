"""Torsion-free congruence level selection and the analytic index bounds.

The congruence-level search is exact; the GRH threshold and the volume
bounds are numeric (mpmath at 30 significant digits). No unstated constant
is invented: the error term's 13 and the unconditional level 3 are the only
fixed numbers, and everything configurable defaults to documented
illustrative values supplied by the caller.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from mpmath import mp, mpf, workdps

from .errors import PreconditionError, ResourceCapError
from .ntheory import is_prime, primes_in_range
from .numfield import NumberField, dedekind_split

_DPS = 30
_THRESHOLD_CAP = 1 << 64
ERR_CONSTANT = 13


@dataclass(frozen=True)
class CongruenceLevel:
    rational_prime: int
    inertia: int
    ramification: int
    norm: int
    torsion_free_certificate: bool
    index_bound: int
    dim_G: int

    def to_json(self) -> dict:
        return {
            "rational_prime": str(self.rational_prime),
            "inertia": self.inertia,
            "ramification": self.ramification,
            "norm": str(self.norm),
            "torsion_free_certificate": self.torsion_free_certificate,
            "index_bound": str(self.index_bound),
            "dim_G": self.dim_G,
        }


@dataclass(frozen=True)
class GrhReport:
    d: int
    log_D: object          # mpf
    threshold_x: int
    li_at_threshold: object
    err_at_threshold: object
    smallest_actual_prime_norm: int | None
    config: dict

    def to_json(self) -> dict:
        from .report import mpf_str
        norm = self.smallest_actual_prime_norm
        return {
            "d": self.d,
            "log_D": mpf_str(self.log_D),
            "threshold_x": str(self.threshold_x),
            "li_at_threshold": mpf_str(self.li_at_threshold),
            "err_at_threshold": mpf_str(self.err_at_threshold),
            "smallest_actual_prime_norm": None if norm is None else str(norm),
            "config": dict(self.config),
        }


def kionke_criterion(q: int, e: int) -> bool:
    """Level-q torsion-freeness for a prime ideal of ramification e.

    The level kills torsion iff its (p-1)-th power divides no p*O; only
    p = q can fail, which happens exactly when e >= q - 1.
    """
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    if e < 1:
        raise PreconditionError("ramification index must be >= 1")
    return e <= q - 2


def find_congruence_level(K: NumberField, dim_G: int, scan_cap: int = 10**6,
                          threads: int = 1,
                          unreliable_out: list[int] | None = None) -> CongruenceLevel:
    """Smallest-norm prime ideal giving a torsion-free congruence level.

    Scans rational primes in increasing order, splits each, and keeps the
    minimal passing norm; ties go to smaller q, then smaller inertia. The
    scan stops once no unscanned prime can beat the best norm, or raises
    when the cap is hit first.
    """
    if dim_G < 1:
        raise PreconditionError("dim_G must be >= 1")
    best: tuple[int, int, int, int] | None = None  # (norm, q, f, e)

    def scan_block(block: list[int]) -> tuple[tuple[int, int, int, int] | None, list[int]]:
        local_best = None
        local_unreliable = []
        for q in block:
            sp = dedekind_split(K, q)
            if sp.index_divisible:
                local_unreliable.append(q)
                continue
            for e, f in sp.factors:
                if not kionke_criterion(q, e):
                    continue
                cand = (q**f, q, f, e)
                if local_best is None or cand < local_best:
                    local_best = cand
        return local_best, local_unreliable

    lo = 2
    block_span = 64
    pool = (concurrent.futures.ThreadPoolExecutor(max_workers=threads)
            if threads > 1 else None)
    try:
        while True:
            if best is not None and lo > best[0]:
                break
            if lo > scan_cap:
                raise ResourceCapError(
                    f"prime scan cap {scan_cap} exceeded without a final answer")
            spans = []
            for _ in range(max(1, threads)):
                spans.append((lo, min(lo + block_span, scan_cap + 1)))
                lo = spans[-1][1]
                if lo > scan_cap:
                    break
            blocks = [primes_in_range(a, b) for a, b in spans]
            results = (pool.map(scan_block, blocks) if pool is not None
                       else map(scan_block, blocks))
            for local_best, local_unreliable in results:
                if unreliable_out is not None:
                    unreliable_out.extend(local_unreliable)
                if local_best is not None and (best is None or local_best < best):
                    best = local_best
    finally:
        if pool is not None:
            pool.shutdown()
    norm_, q, f, e = best
    return CongruenceLevel(
        rational_prime=q, inertia=f, ramification=e, norm=norm_,
        torsion_free_certificate=True, index_bound=norm_**dim_G, dim_G=dim_G)


# ---------------------------------------------------------------- analytics

def _integrand(t):
    return 1 / mp.log(t)


# Gauss-Legendre nodes, computed once per order by Newton on the recurrence.
# Keyed only by order, so concurrent first calls race benignly to the same value.
_gl_nodes: dict[int, tuple] = {}


def _legendre_nodes(n: int):
    nodes = _gl_nodes.get(n)
    if nodes is None:
        with workdps(_DPS + 15):
            pts = []
            for k in range(1, n + 1):
                x = mp.cos(mp.pi * (k - mpf(1) / 4) / (n + mpf(1) / 2))
                dp = mpf(1)
                for _ in range(80):
                    p0, p1 = mpf(1), x
                    for j in range(2, n + 1):
                        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                    dp = n * (x * p1 - p0) / (x * x - 1)
                    dx = p1 / dp
                    x = x - dx
                    if abs(dx) < mpf(10) ** (-_DPS - 10):
                        break
                pts.append((x, 2 / ((1 - x * x) * dp * dp)))
            nodes = tuple(pts)
        _gl_nodes[n] = nodes
    return nodes


def _gauss(a, b, n):
    c = (b - a) / 2
    m = (a + b) / 2
    s = mpf(0)
    for x, w in _legendre_nodes(n):
        s += w * _integrand(m + c * x)
    return c * s


def _integral(a, b, tol):
    if a == b:
        return mpf(0)
    lo = _gauss(a, b, 16)
    hi = _gauss(a, b, 24)
    if abs(hi - lo) <= tol * (1 + abs(hi)):
        return hi
    m = (a + b) / 2
    return _integral(a, m, tol / 2) + _integral(m, b, tol / 2)

# cache of dyadic segments [2^i, 2^(i+1)]; each entry depends only on i, so
# evaluation order (and thread interleaving) cannot change any result
_li_segments: dict[int, object] = {}


def _li_segment(i: int):
    seg = _li_segments.get(i)
    if seg is None:
        seg = _integral(mpf(2) ** i, mpf(2) ** (i + 1), mpf(10) ** -14)
        _li_segments[i] = seg
    return seg


def logarithmic_integral(x):
    """Li(x) = integral from 2 to x of dt/log t, relative error < 1e-6."""
    if x < 2:
        raise PreconditionError("Li is taken from 2; need x >= 2")
    with workdps(_DPS):
        xm = mpf(x)
        total = mpf(0)
        i = 1
        while mpf(2) ** (i + 1) <= xm:
            total += _li_segment(i)
            i += 1
        total += _integral(mpf(2) ** i, xm, mpf(10) ** -14)
        return total


def li_lower_surrogate(x):
    """The elementary lower-bound surrogate x / log x."""
    if x < 2:
        raise PreconditionError("need x >= 2")
    with workdps(_DPS):
        return mpf(x) / mp.log(x)


def grh_error(x, d: int, log_D):
    """Err(x) = 13 sqrt(x) (log D + d log x)."""
    if x < 2:
        raise PreconditionError("need x >= 2")
    if d < 1:
        raise PreconditionError("degree must be >= 1")
    with workdps(_DPS):
        xm = mpf(x)
        return ERR_CONSTANT * mp.sqrt(xm) * (mpf(log_D) + d * mp.log(xm))


def _grh_holds(x, d, log_D) -> bool:
    return logarithmic_integral(x) > grh_error(x, d, log_D) + d * d


def grh_threshold(d: int, log_D, field: NumberField | None = None,
                  scan_cap: int = 10**6) -> GrhReport:
    """Smallest integer x with Li(x) > Err(x) + d^2, by doubling then
    bisection; the doubling-grid half point is re-checked to fail.

    When a field is supplied, its actual minimal torsion-free prime norm is
    attached for the empirical comparison norm <= threshold.
    """
    if d < 1:
        raise PreconditionError("degree must be >= 1")
    with workdps(_DPS):
        if mpf(log_D) < 0:
            raise PreconditionError("log_D must be >= 0")
        x = 4
        while not _grh_holds(x, d, log_D):
            x *= 2
            if x > _THRESHOLD_CAP:
                raise ResourceCapError("GRH threshold exceeds 2^64")
        lo, hi = x // 2, x  # predicate false at lo (or lo < 4), true at hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _grh_holds(mid, d, log_D):
                hi = mid
            else:
                lo = mid
        assert not _grh_holds(hi // 2, d, log_D), "no crossing at half threshold"
        norm_ = None
        if field is not None:
            norm_ = find_congruence_level(field, 1, scan_cap=scan_cap).norm
        return GrhReport(
            d=d, log_D=mpf(log_D), threshold_x=hi,
            li_at_threshold=logarithmic_integral(hi),
            err_at_threshold=grh_error(hi, d, log_D),
            smallest_actual_prime_norm=norm_,
            config={"err_constant": ERR_CONSTANT, "margin": "d^2"})


def unconditional_index_bound(d: int, dim_H: int) -> int:
    """3^(d dim H): the level-3 congruence subgroup is always torsion-free."""
    if d < 1 or dim_H < 1:
        raise PreconditionError("d and dim_H must be >= 1")
    return 3 ** (d * dim_H)


def volume_index_bound_grh(v, dim_H: int, epsilon, prasad_c1, prasad_c2, lemma_C):
    """lemma_C * ((c1 + c2) log v)^((2 + eps) dim H), the volume-only form."""
    if dim_H < 1:
        raise PreconditionError("dim_H must be >= 1")
    with workdps(_DPS):
        vm = mpf(v)
        if vm <= mp.e:
            raise PreconditionError("need v > e so that log v > 1")
        base = (mpf(prasad_c1) + mpf(prasad_c2)) * mp.log(vm)
        return mpf(lemma_C) * base ** ((2 + mpf(epsilon)) * dim_H)


def generator_bound_pipeline(v, alpha, c, f_form: str = "power"):
    """(f(v log^c v) + log log v) / v with f(u) = u^(1-alpha) or (log u)^alpha."""
    with workdps(_DPS):
        vm = mpf(v)
        if vm <= mp.e ** mp.e:
            raise PreconditionError("need v > e^e so that log log v > 1")
        u = vm * mp.log(vm) ** mpf(c)
        if f_form == "power":
            fu = u ** (1 - mpf(alpha))
        elif f_form == "polylog":
            fu = mp.log(u) ** mpf(alpha)
        else:
            raise PreconditionError(f"unsupported f_form: {f_form!r}")
        return (fu + mp.log(mp.log(vm))) / vm
