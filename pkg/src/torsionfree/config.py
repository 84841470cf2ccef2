"""Configuration of the constants no published value pins down.

Every constant here except prime_scan_cap is an illustrative default: the
asymptotic statements leave c1, c2, a, b, the Jordan index and the epsilon
margin unspecified, so silent defaults would launder invented numbers into
results. Loading emits one warning line per defaulted constant; a config
file (JSON object, same keys) or the TORSIONFREE_CONFIG env var overrides.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

from .errors import PreconditionError

ENV_VAR = "TORSIONFREE_CONFIG"

ILLUSTRATIVE = ("prasad_c1", "prasad_c2", "belolipetsky_a", "belolipetsky_b",
                "jordan_index", "epsilon", "lemma_C")


@dataclass(frozen=True)
class Config:
    prasad_c1: float = 1.0
    prasad_c2: float = 1.0
    belolipetsky_a: float = 1.0
    belolipetsky_b: float = 1.0
    jordan_index: int = 60
    epsilon: float = 0.1
    prime_scan_cap: int = 10**6
    lemma_C: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise PreconditionError(f"{f.name} must be numeric")
            if v <= 0:
                raise PreconditionError(f"{f.name} must be positive")
        if int(self.jordan_index) != self.jordan_index:
            raise PreconditionError("jordan_index must be an integer")
        if int(self.prime_scan_cap) != self.prime_scan_cap:
            raise PreconditionError("prime_scan_cap must be an integer")


def load_config(path: str | None = None) -> tuple[Config, list[str]]:
    """Config plus the warning lines the caller should print to stderr."""
    warnings: list[str] = []
    source = path or os.environ.get(ENV_VAR)
    data: dict = {}
    if source:
        if os.path.exists(source):
            with open(source) as fh:
                try:
                    data = json.load(fh)
                except json.JSONDecodeError as exc:
                    raise PreconditionError(
                        f"config file {source} is not valid JSON: {exc}")
            if not isinstance(data, dict):
                raise PreconditionError("config file must hold a JSON object")
        else:
            warnings.append(f"config file {source} not found; "
                            "defaults in effect")
    else:
        warnings.append("no config file given; defaults in effect")
    known = {f.name for f in fields(Config)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise PreconditionError(f"unknown config keys: {', '.join(unknown)}")
    cfg = Config(**data)
    for name in ILLUSTRATIVE:
        if name not in data:
            warnings.append(
                f"warning: {name} = {getattr(cfg, name)} is an illustrative "
                "default, not a published value")
    return cfg, warnings
