"""Backend selection for the elimination kernels.

The compiled extension is used when present; setting ``LOGCURVE_PURE=1`` in
the environment forces the pure-Python/numpy fallback.  Both backends
implement identical algorithms and produce identical output.
"""

from __future__ import annotations

import os

if os.environ.get("LOGCURVE_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
echelon_int = _impl.echelon_int
modp_rank = _impl.modp_rank

# word-sized primes used for certified rank lower bounds
RANK_PRIMES = (2147483629, 2147483587)
