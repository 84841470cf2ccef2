"""Deterministic report serialization.

Every command emits one JSON document built here so the bytes are stable:
keys sorted, floats printed through mpmath at a fixed 17 significant digits,
big integers as decimal strings.
"""

from __future__ import annotations

import json

from mpmath import mpf, nstr, workdps

from . import __version__

GENERATED_BY = f"torsionfree {__version__}"


def mpf_str(x) -> str:
    with workdps(30):
        return nstr(mpf(x), 17)


def envelope(report: dict) -> dict:
    return {"report": report, "generated_by": GENERATED_BY}


def dumps_report(report: dict) -> str:
    return json.dumps(envelope(report), indent=2, sort_keys=True) + "\n"
