"""Backend selection for the hot kernels.

The compiled extension is preferred when present; ``PCX_BACKEND=python``
forces the pure-numpy fallback.  Both backends implement identical
contracts (see ``_kernels_py``), so everything above this module is
backend-agnostic.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PCX_BACKEND", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

winding_numbers = _impl.winding_numbers
apollonian_pair_sups = _impl.apollonian_pair_sups


def backends():
    """All importable backends, for parity tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels_cy

        out["cython"] = _kernels_cy
    except ImportError:
        pass
    return out
