"""Exact workbench for finite systems of difference equations over the reals.

Every solver entry point takes script text in the workbench language and
returns the decoded JSON report; ``certify`` re-verifies a report produced by
any of them. All coefficients, shifts, and values are exact rationals encoded
as strings like ``"3/2"``.
"""

import json as _json

from ._core import (  # noqa: F401
    ScriptError,
    WorkbenchError,
    canonical,
    gallery_names,
)
from . import _core


def solve(script, radius=4):
    """Solve the script's system on a finite window."""
    return _json.loads(_core.solve(script, radius))


def min_supnorm(script, radius=4):
    """Exact minimum sup-norm over window assignments satisfying the system."""
    return _json.loads(_core.min_supnorm(script, radius))


def deduce(script):
    """Run the script's deduce directive."""
    return _json.loads(_core.deduce(script))


def poly_solve(script, degree_bound=-1):
    """Solve by polynomial ansatz up to a degree bound."""
    return _json.loads(_core.poly_solve(script, degree_bound))


def gallery(name, **params):
    """Run a named example construction and check its claims."""
    return _json.loads(_core.gallery(name, {k: str(v) for k, v in params.items()}))


def certify(report):
    """Re-verify a report (dict or JSON text); returns {'ok', 'exit', 'detail'}."""
    if not isinstance(report, str):
        report = _json.dumps(report)
    ok, exit_code, detail = _core.certify(report)
    return {"ok": ok, "exit": exit_code, "detail": detail}


__all__ = [
    "ScriptError",
    "WorkbenchError",
    "canonical",
    "certify",
    "deduce",
    "gallery",
    "gallery_names",
    "min_supnorm",
    "poly_solve",
    "solve",
]
