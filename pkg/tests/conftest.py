"""Shared fixtures.

The census kernel is the one expensive piece of the suite, so the runs are
session-scoped: ``census`` covers v <= 7 (a couple of seconds warm) and is
shared by the invariant and enumeration tests; the acceptance module owns
its deeper v <= 8 run.
"""

import struct

import pytest

from divide_forge.divide import Divide
from divide_forge.enumeration import enumerate_divides
from divide_forge.surface_map import decode_canonical_form


def divide_from_entry(entry):
    """Rebuild the Divide a census row encodes."""
    (free_loops,) = struct.unpack(">H", entry.canonical[:2])
    return Divide(decode_canonical_form(entry.canonical[2:]), free_loops=free_loops)


@pytest.fixture(scope="session")
def census():
    return enumerate_divides(7)
