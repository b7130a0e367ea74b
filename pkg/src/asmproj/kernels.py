"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module. Set ``ASMPROJ_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("ASMPROJ_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND

asm_entries = _impl.asm_entries
count_asms = _impl.count_asms
potential = _impl.potential
inverted_pairs = _impl.inverted_pairs
monotonize_flat = _impl.monotonize_flat
sweep_row_increasing = _impl.sweep_row_increasing


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    from . import _pure

    out = {"python": _pure}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        out["cython"] = _speedups
    return out
