"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SIMPLELIE_PURE=1 to force the Python fallback (used by the benchmark
and the kernel-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("SIMPLELIE_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

jacobi_scan = _impl.jacobi_scan
