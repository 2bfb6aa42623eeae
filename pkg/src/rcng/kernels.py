"""Kernel backend selection.

The compiled extension is used when it imports; setting ``RCNG_PURE_PYTHON=1``
forces the pure-Python implementation.
"""

import os

if os.environ.get("RCNG_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
rainbow_feasible = _impl.rainbow_feasible
search_coloring = _impl.search_coloring
canon_min = _impl.canon_min
