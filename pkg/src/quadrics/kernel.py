"""Census kernel selection and caching.

The hot loop of every fixed-point computation is one scan of S_n per
parabolic subset K: filter to minimal coset representatives, count
inversions, and read off the R-set bitmask. A compiled Cython extension
(quadrics._kernel) is used when it was built; otherwise the pure Python
twin (quadrics._kernel_py) takes over with identical results. Set
QUADRICS_PURE=1 to force the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os
from functools import lru_cache
from types import ModuleType

from quadrics import _kernel_py

if os.environ.get("QUADRICS_PURE"):
    _backend: ModuleType = _kernel_py
    BACKEND = "pure-python"
else:
    try:
        from quadrics import _kernel as _compiled

        _backend = _compiled
        BACKEND = "compiled"
    except ImportError:
        _backend = _kernel_py
        BACKEND = "pure-python"


def available_backends() -> dict[str, ModuleType]:
    """All loadable kernel implementations, keyed by name."""
    backends: dict[str, ModuleType] = {"pure-python": _kernel_py}
    try:
        from quadrics import _kernel as _compiled

        backends["compiled"] = _compiled
    except ImportError:
        pass
    return backends


def _validate(n: int, k_members: tuple[int, ...]) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    prev = 0
    for i in k_members:
        if not isinstance(i, int) or not 1 <= i <= n - 1:
            raise ValueError(f"member {i!r} out of range [1, {n - 1}]")
        if i <= prev:
            raise ValueError(f"{k_members} is not strictly increasing")
        if prev and i - prev < 2:
            raise ValueError(f"{k_members} is not special")
        prev = i


@lru_cache(maxsize=None)
def cell_census(n: int, k_members: tuple[int, ...] = ()) -> dict[tuple[int, int], int]:
    """Tally W^K by (inversion count, R-set bitmask).

    Returns {(length, r_mask): multiplicity} where bit i-1 of r_mask is set
    exactly when i lies in R_K(w). Treat the returned dict as read-only;
    it is cached and shared between callers.
    """
    _validate(n, k_members)
    return _backend.cell_census(n, tuple(k_members))
