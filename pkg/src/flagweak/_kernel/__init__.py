"""Hot-loop kernels: a compiled fast path with a pure-Python fallback.

The compiled module is optional; when it failed to build or is missing the
pure implementation is used transparently. `BACKEND` reports the choice.
"""

from __future__ import annotations

import numpy as np

try:
    from . import cyimpl as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build environment
    from . import pyimpl as _impl

    BACKEND = "python"

leq_matrix = _impl.leq_matrix
bfs_eccentricities = _impl.bfs_eccentricities


def pack_order_keys(elements) -> tuple[np.ndarray, np.ndarray]:
    """Per-element arrays indexed by value: window position and color."""
    m = len(elements)
    n = elements[0].context.n if m else 0
    pos = np.empty((m, n), dtype=np.int32)
    col = np.empty((m, n), dtype=np.int32)
    for e, g in enumerate(elements):
        for i, (v, c) in enumerate(g.window):
            pos[e, v - 1] = i
            col[e, v - 1] = c
    return pos, col
