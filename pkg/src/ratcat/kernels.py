"""Select the compiled kernels when available, else the pure-Python ones.

Set ``RATCAT_PURE=1`` in the environment to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("RATCAT_PURE"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

first_violation = _impl.first_violation
enumerate_nx = _impl.enumerate_nx
laser_end = _impl.laser_end
laser_ends = _impl.laser_ends
assign_regions = _impl.assign_regions
promote = _impl.promote
rectify_offset = _impl.rectify_offset

BACKENDS = {"python": _pykernels}
if BACKEND == "cython":
    BACKENDS["cython"] = _impl
