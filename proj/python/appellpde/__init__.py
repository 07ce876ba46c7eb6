"""Python access to the appell library: theta-system solves, identity checks and q-series.

Exact rationals cross the boundary as strings and come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import AppellError, UsageError

__all__ = [
    "AppellError",
    "UsageError",
    "run",
    "solve",
    "verify",
    "series",
    "eisenstein",
    "eta",
    "partition_numbers",
    "vandermonde_det",
    "selftest",
    "acceptance",
]


def _series(doc):
    """{exponent: Fraction}, exponents as Fractions of q, plus the truncation order."""
    denom = doc["D"]
    terms = {Fraction(m, denom): _coeff(c) for m, c in doc["terms"]}
    return terms, Fraction(doc["N"], denom)


def _coeff(c):
    return Fraction(c) if isinstance(c, str) else c


def run(*args):
    """Runs the command line tool in-process and returns (status, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def solve(level, order=0, head=4):
    """Solved theta system as a dict (same schema as ``appell solve --format json``)."""
    return json.loads(_core.solve_json(level, order, head))


def verify(target="all", level=3, order=None):
    """List of check dicts with keys name, passed, order, first_offender."""
    return _core.verify(target, level, order)


def series(name, level=3, r=1, order=None):
    """A named series in the JSON schema of ``appell series --format json``."""
    args = ["series", "--series-name", name, "--level", level, "--r", r, "--format", "json"]
    if order is not None:
        args += ["--order", order]
    code, out, err = run(*args)
    if code == 2:
        raise UsageError(err.strip())
    if code != 0:
        raise AppellError(err.strip())
    return json.loads(out)


def eisenstein(k, n):
    """Coefficients of E_k below q^n as Fractions."""
    doc = json.loads(_core.eisenstein_json(k, n))
    terms, _ = _series(doc)
    return [terms.get(Fraction(i), Fraction(0)) for i in range(n)]


def eta(n):
    """Dedekind eta below q^n as {exponent: coefficient}, exponents Fractions."""
    terms, _ = _series(json.loads(_core.eta_json(n)))
    return terms


def partition_numbers(n):
    return [int(x) for x in _core.partition_numbers(n)]


def vandermonde_det(level):
    return Fraction(_core.vandermonde_det(level))


def selftest():
    """True when the built-in self test passes."""
    code, _, _ = run("selftest")
    return code == 0


def acceptance():
    return _core.acceptance()
