"""Invariant affine connections on odd spheres.

Thin wrapper over the compiled ``_homoconn`` module: structured reports are
returned as plain dicts (parsed from the core's JSON emitters).
"""

import json as _json

try:  # installed wheel: extension lives inside the package
    from . import _homoconn as _core
except ImportError:  # build tree: extension on PYTHONPATH
    import _homoconn as _core

__all__ = [
    "dims",
    "connection_report",
    "einstein_scan",
    "verify",
    "skew_family_coeffs",
]


def dims(ns=(1, 2, 3, 4, 5)):
    """Dimension table (invariant / metric / skew) computed by the solver."""
    return _core.dims(list(ns))


def connection_report(sphere, r, q=None, n=4, tolerance=1e-8):
    """Full report for one skew-torsion connection.

    ``sphere`` is one of ``"s3"``, ``"s5"``, ``"s7"``, ``"general"``;
    ``q`` is a complex parameter (``s5``/``s7`` only).
    """
    return _json.loads(
        _core.connection_report_json(sphere, r, q, n, tolerance)
    )


def einstein_scan(sphere, r_grid, q_grid=(), n=4, tolerance=1e-8):
    """Einstein-locus scan over a parameter grid."""
    return _json.loads(
        _core.einstein_scan_json(
            sphere, list(r_grid), [complex(q) for q in q_grid], n, tolerance
        )
    )


def verify(seed=2024, trials=100):
    """Run the verification batteries; returns the structured summary."""
    return _json.loads(_core.verify_json(seed, trials))


def skew_family_coeffs(sphere, r, q=None, n=4):
    """Coefficient array ``c[i][j][k]`` of the skew-family bilinear map."""
    return _core.skew_family_coeffs(sphere, r, q, n)
