"""Backend selection for the elimination kernels.

The compiled module is used when it imports; setting the environment
variable ``JORDANTYPE_PURE_PYTHON=1`` forces the pure-Python reference.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None
else:
    BACKENDS["cython"] = _compiled

if _compiled is not None and not os.environ.get("JORDANTYPE_PURE_PYTHON"):
    _active = _compiled
    BACKEND = "cython"
else:
    _active = _kernels_py
    BACKEND = "python"

rref_modp = _active.rref_modp
rank_modp = _active.rank_modp
rref_int = _active.rref_int
rank_int = _active.rank_int
matmul_modp = _active.matmul_modp
matmul_int = _active.matmul_int
