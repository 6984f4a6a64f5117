"""Kernel lane selection: compiled extension if available, else pure Python.

Set ``ARITHBILLIARDS_PURE=1`` to force the pure-Python lane (used by the
benchmark and to debug the extension).  ``BACKEND`` names the active lane.
"""

from __future__ import annotations

import os

if os.environ.get("ARITHBILLIARDS_PURE", "") not in ("", "0"):
    from arithbilliards import kernels_py as _impl
else:
    try:
        from arithbilliards import kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from arithbilliards import kernels_py as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

trace_paths = _impl.trace_paths
least_closure_violations = _impl.least_closure_violations
reach_scan = _impl.reach_scan
coordinate_sum_violations = _impl.coordinate_sum_violations
bfs_components = _impl.bfs_components
