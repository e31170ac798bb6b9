"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it imports; setting
``TSALG_PURE_PYTHON=1`` forces the numpy fallback. Both backends expose
``rref_inplace`` and ``stabilizer_orders`` with identical semantics.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _fallback

try:
    from . import _speedups as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _fallback}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

if _compiled is not None and os.environ.get("TSALG_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "cython"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]

# int64 products of two residues must not overflow
COMPILED_PRIME_LIMIT = 2**31


def backend(name: str | None = None) -> ModuleType:
    return BACKENDS[name or BACKEND]


def rref_inplace(M, p: int, ncols: int = -1) -> list[int]:
    if M.dtype == object or p >= COMPILED_PRIME_LIMIT:
        return _fallback.rref_inplace(M, p, ncols)
    return _impl.rref_inplace(M, p, ncols)


def stabilizer_orders(*args):
    return _impl.stabilizer_orders(*args)
