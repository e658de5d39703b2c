"""Kernel backend selection.

``KMS_BACKEND=numba`` (the default when numba imports) uses the compiled
kernels; ``KMS_BACKEND=python`` forces the pure numpy/Python reference
path.  ``auto`` falls back silently when numba is unavailable; asking for
numba explicitly propagates the import error.
"""

import os

_choice = os.environ.get("KMS_BACKEND", "auto").strip().lower() or "auto"

if _choice in ("auto", "numba"):
    try:
        from . import _kernels_nb as kernels
        ACTIVE_BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_py as kernels
        ACTIVE_BACKEND = "python"
elif _choice in ("python", "numpy"):
    from . import _kernels_py as kernels
    ACTIVE_BACKEND = "python"
else:
    raise ValueError(
        f"KMS_BACKEND={_choice!r} not recognized; use 'numba', 'python' or 'auto'"
    )

__all__ = ["kernels", "ACTIVE_BACKEND"]
