"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over with identical results.  ``TREEORDER_PURE_PYTHON=1``
forces the fallback.
"""

import os

from treeorder import _pykernels

try:
    if os.environ.get("TREEORDER_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from treeorder import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

rise_matrix = _impl.rise_matrix
check_rise_matrix = _impl.check_rise_matrix

BACKENDS = {"python": _pykernels}
if BACKEND == "cython":
    BACKENDS["cython"] = _impl
tau_u_codes = _impl.tau_u_codes
cayley_rise_codes = _impl.cayley_rise_codes
