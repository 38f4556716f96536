"""Monomial hyperplane arrangements, their restrictions, and numeric checks
of the fibration of the complement over the braid-arrangement complement.

Exact combinatorics (arrangements, intersection lattices, characteristic
polynomials, restriction identification) and double-precision verification
of the fiber geometry are implemented in the C++ extension; this wrapper
decodes the JSON payloads and exact integer strings.
"""

import json as _json

from ._core import (
    build,
    reflection,
    lattice,
    charpoly,
    identify,
    scan,
    map_f,
    triple_check,
    genus,
    punctures,
    free_rank,
)
from . import _core as _impl

__all__ = [
    "build",
    "reflection",
    "lattice",
    "charpoly",
    "charpoly_coefficients",
    "identify",
    "scan",
    "map_f",
    "triple_check",
    "genus",
    "punctures",
    "free_rank",
    "verify",
    "report",
]


def charpoly_coefficients(k, l, r):
    """Ascending coefficients of the characteristic polynomial, as ints."""
    return [int(c) for c in _impl.charpoly_coefficients(k, l, r)]


def verify(k, l, r, samples=100, seed=1729):
    """Run the numeric fiber battery for one (k, l, r); returns a dict."""
    return _json.loads(_impl.verify_json(k, l, r, samples, seed))


def report(k, l, r, seed=1729):
    """Topological invariants of the generic fiber; returns a dict."""
    return _json.loads(_impl.report_json(k, l, r, seed))
