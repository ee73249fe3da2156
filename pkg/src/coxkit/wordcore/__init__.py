"""Word-problem kernels.

The compiled extension `coxkit._speedups` provides the same WordKernel
surface as the pure-Python module; whichever is importable wins.  Set
the environment variable COXKIT_PURE=1 to force the fallback.
"""
from __future__ import annotations

import os

from .pure import ClosureBudgetError, WordKernel as PureWordKernel

if os.environ.get("COXKIT_PURE"):
    WordKernel = PureWordKernel
    IMPLEMENTATION = "pure"
else:
    try:
        from coxkit._speedups import WordKernel  # type: ignore[no-redef]
        IMPLEMENTATION = "cython"
    except ImportError:
        WordKernel = PureWordKernel
        IMPLEMENTATION = "pure"

__all__ = ["WordKernel", "PureWordKernel", "ClosureBudgetError", "IMPLEMENTATION"]
