"""Select the compiled kernels when importable, else the pure-Python ones.

Set ``TRABOUND_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("TRABOUND_PURE_PYTHON", "") not in ("", "0"):
    from trabound import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from trabound import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from trabound import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["BACKEND", "kernels"]
