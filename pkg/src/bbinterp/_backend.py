"""Select the grid-kernel implementation at import time.

The compiled ``_core`` extension is preferred. Set ``BBINTERP_BACKEND=python``
to force the numpy fallback (useful for debugging and benchmarking).
"""

from __future__ import annotations

import os
from types import ModuleType

from bbinterp import _fallback


def _select() -> tuple[ModuleType, str]:
    if os.environ.get("BBINTERP_BACKEND", "").lower() == "python":
        return _fallback, "python"
    try:
        from bbinterp import _core
    except ImportError:
        return _fallback, "python"
    return _core, "cython"


impl, BACKEND = _select()


def available() -> dict[str, ModuleType]:
    """All importable backends keyed by name."""
    out = {"python": _fallback}
    try:
        from bbinterp import _core
    except ImportError:
        pass
    else:
        out["cython"] = _core
    return out
