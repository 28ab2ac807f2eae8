"""Select the elimination backend.

The compiled module is used when it was built; set ``NESTHILB_PURE_PYTHON=1``
to force the fallback (the test suite uses this to compare both paths).
"""

import os

from ._kernels_py import reduce_generic, rref_generic
from . import _kernels_py as python_backend

compiled_backend = None
if not os.environ.get("NESTHILB_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:
        compiled_backend = None

if compiled_backend is not None:
    BACKEND = "cython"
    rref_modp = compiled_backend.rref_modp
    reduce_modp = compiled_backend.reduce_modp
else:
    BACKEND = "python"
    rref_modp = python_backend.rref_modp
    reduce_modp = python_backend.reduce_modp

__all__ = ["BACKEND", "rref_modp", "reduce_modp", "rref_generic", "reduce_generic",
           "compiled_backend", "python_backend"]
