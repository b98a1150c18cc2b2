"""Backend selection for the dense polynomial kernels.

The compiled module is preferred when it imported cleanly and the scalars fit
machine words; ``DRINFACTOR_PURE=1`` forces the pure backend.  Both backends
expose identical functions (see ``_kernel_py``).
"""

import os

from . import _kernel_py as pure

if os.environ.get("DRINFACTOR_PURE", "") in ("", "0"):
    try:
        from . import _kernel_c as compiled
    except ImportError:
        compiled = None
else:
    compiled = None

BACKEND = "compiled" if compiled is not None else "pure"

# largest p for which a*b with a, b < p fits comfortably in int64
PRIME_LIMIT = 2**31


def prime_kernel(p):
    """Kernel module for coefficient arithmetic mod p."""
    if compiled is not None and p < PRIME_LIMIT:
        return compiled
    return pure


def table_kernel():
    """Kernel module for table-driven small-field arithmetic."""
    return compiled if compiled is not None else pure
