"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``FKCABLE_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("FKCABLE_PURE_PYTHON"):
    from ._kernels_py import axpy_dense, divexact_dense, mul_dense

    BACKEND = "python"
else:
    try:
        from ._kernels import axpy_dense, divexact_dense, mul_dense

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import axpy_dense, divexact_dense, mul_dense

        BACKEND = "python"

__all__ = ["BACKEND", "axpy_dense", "divexact_dense", "mul_dense"]
