"""Selection of the computational backend for the hot loops.

At import time the compiled extension is preferred and the pure-Python
implementation is the fallback. ``DOTPHONON_BACKEND=pure`` forces the
fallback, ``DOTPHONON_BACKEND=compiled`` makes a missing extension a hard
error instead of a silent slowdown. Both backends implement identical
contracts (``rates_grid`` and ``corr_sums``) and are compared against each
other in the test suite and in ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os

_requested = os.environ.get("DOTPHONON_BACKEND", "").strip().lower()
if _requested not in ("", "compiled", "pure"):
    raise RuntimeError(
        f"DOTPHONON_BACKEND must be 'compiled' or 'pure', got {_requested!r}"
    )

if _requested == "pure":
    from . import _purekern as _impl
else:
    try:
        from . import _fastkern as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _purekern as _impl

BACKEND: str = _impl.NAME

STATUS_OK = 0
STATUS_DEGENERATE = 1
STATUS_NONPOSITIVE_EQ = 2
STATUS_INVALID = 3

STATUS_NAMES = {
    STATUS_OK: "ok",
    STATUS_DEGENERATE: "DegenerateLevels",
    STATUS_NONPOSITIVE_EQ: "NonPositiveQubitEnergy",
    STATUS_INVALID: "InvalidParams",
}

WARN_REGIME = 1
WARN_NEAR_DEGENERATE = 2

rates_grid = _impl.rates_grid
corr_sums = _impl.corr_sums
