"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the
pure-Python kernels are used.  Set ``STAIRS_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from . import _pykernels as pure

try:
    if os.environ.get("STAIRS_PURE_PYTHON"):
        raise ImportError("pure Python forced by environment")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

BACKEND = "cython" if compiled is not None else "python"
active = compiled if compiled is not None else pure

add_shifted = active.add_shifted
sub_shifted = active.sub_shifted
apply_factors = active.apply_factors
compositions = active.compositions
