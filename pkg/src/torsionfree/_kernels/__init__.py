"""Sieve kernels with a compiled fast path and a numpy fallback.

Set TORSIONFREE_PURE=1 to force the fallback (useful for timing and for
checking that both implementations agree). The active choice is exposed as
IMPLEMENTATION ("compiled" or "pure") and COMPILED.
"""

from __future__ import annotations

import os

if os.environ.get("TORSIONFREE_PURE") == "1":
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
COMPILED: bool = IMPLEMENTATION == "compiled"

prime_count_range = _impl.prime_count_range
prime_count_in_classes = _impl.prime_count_in_classes
poly_root_count_over_primes = _impl.poly_root_count_over_primes
totient_min_violation = _impl.totient_min_violation

__all__ = [
    "COMPILED",
    "IMPLEMENTATION",
    "poly_root_count_over_primes",
    "prime_count_in_classes",
    "prime_count_range",
    "totient_min_violation",
]
