import os
import subprocess
import sys
from pathlib import Path

import pytest

from torsionfree.numfield import make_cosine_field, make_field
from torsionfree.polyalg import IntPoly

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CONSTRUCTION_PRIMES = (5, 7, 11, 13)


@pytest.fixture(scope="session")
def field_q():
    return make_field(IntPoly((-1, 1)))


@pytest.fixture(scope="session")
def field_sqrt2():
    return make_field(IntPoly((-2, 0, 1)))


@pytest.fixture(scope="session")
def cosine_fields():
    return {p: make_cosine_field(p) for p in CONSTRUCTION_PRIMES}


def run_cli(*args, env_extra=None):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    env = os.environ.copy()
    env.pop("TORSIONFREE_CONFIG", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([sys.executable, "-m", "torsionfree.cli", *args],
                          capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture(scope="session")
def cli():
    return run_cli
