"""Scan-kernel selection: compiled extension when present, else pure Python.

Both backends expose the same three functions with identical semantics
and emission order; `BACKEND` records which one won at import time.
"""

from __future__ import annotations

try:  # pragma: no cover - depends on how the package was built
    from . import _scan as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from . import _scan_py as _impl

    BACKEND = "python"

MAX_KERNEL_NORM = _impl.MAX_KERNEL_NORM

zero_sum_scan = _impl.zero_sum_scan
triplet_scan = _impl.triplet_scan
euclid_scan = _impl.euclid_scan
