"""torsionfree: certified torsion-free congruence levels, torsion lower
bounds, and finite-subgroup bounds for arithmetic lattices.

Everything number-theoretic is exact (Python ints, fractions, interval
certificates); floating point only enters through mpmath in the analytic
estimates, at fixed working precision.
"""

__version__ = "0.1.0"

from . import polyalg  # noqa: F401
from .errors import (  # noqa: F401
    NotSquarefreeError,
    PreconditionError,
    ResourceCapError,
    TorsionfreeError,
)
