"""Backend selection for the brute-force kernels.

The compiled Cython module is used when it was built; otherwise the NumPy
fallback is imported. Set ``NILCLEAN_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("NILCLEAN_PURE_PYTHON"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "python" if compiled_backend is None else "cython"

scan_idempotents = backend.scan_idempotents
first_nilpotent_difference = backend.first_nilpotent_difference
