"""Python access to the ras surface toolkit.

Classes are sequences of integers ``[n, d, r_1, ..., r_m]`` and surfaces are
dicts in the same JSON schema the command-line tool reads.  Omitting the
surface means the generic one with the class's number of points.
"""

import json as _json

from . import _ras
from ._ras import RasError

__all__ = [
    "RasError",
    "cli",
    "intersect",
    "root_orbit",
    "minus_one",
    "minus_two",
    "nef",
    "effective",
    "h0",
    "enumerate_rigid",
]


def _coefficient(x):
    x = int(x)
    # Outside 64 bits the JSON layer expects decimal strings.
    return x if -(2**63) <= x < 2**63 else str(x)


def _cls(c):
    return _json.dumps([_coefficient(x) for x in c])


def _surface(surface, c):
    if surface is None:
        surface = {"m": len(c) - 2}
    return _json.dumps(surface)


def cli(*args):
    """Run the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _ras.cli([str(a) for a in args])


def intersect(a, b, parity="even"):
    return int(_json.loads(_ras.intersect(_cls(a), _cls(b), parity)))


def root_orbit(m, parity="even"):
    return [tuple(int(x) for x in r) for r in _json.loads(_ras.root_orbit(m, parity))]


def _query(fn, c, surface):
    return _json.loads(fn(_surface(surface, c), _cls(c)))


def minus_one(c, surface=None):
    return _query(_ras.minus_one, c, surface)


def minus_two(c, surface=None):
    return _query(_ras.minus_two, c, surface)


def nef(c, surface=None):
    return _query(_ras.nef, c, surface)


def effective(c, surface=None):
    return _query(_ras.effective, c, surface)


def h0(c, surface=None):
    return int(_query(_ras.h0, c, surface))


def enumerate_rigid():
    """Summary of the rigid second-order census."""
    return _json.loads(_ras.enumerate_rigid())
