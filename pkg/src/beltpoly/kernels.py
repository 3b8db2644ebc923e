"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``BELTPOLY_PURE`` is set to a non-empty value other than
``0``, the pure-Python module is used. Both expose ``int_rank`` and
``phase1_feasible`` with identical results.
"""

import os

from . import _kernels_py

pure = _kernels_py

if os.environ.get("BELTPOLY_PURE", "") not in ("", "0"):
    compiled = None
else:
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

if compiled is not None:
    BACKEND = "compiled"
    int_rank = compiled.int_rank
    phase1_feasible = compiled.phase1_feasible
else:
    BACKEND = "python"
    int_rank = _kernels_py.int_rank
    phase1_feasible = _kernels_py.phase1_feasible

__all__ = ["BACKEND", "compiled", "pure", "int_rank", "phase1_feasible"]
