"""Kernel backend selection.

The compiled Cython kernels cover graphs with up to 64 vertices (vertex
sets are single machine words there); larger inputs, or environments
without the extension, fall back to the pure-Python kernels, which accept
any n.  Set ``PARTIALCUBE_PURE=1`` to force the fallback.

Interval tables are opaque to callers: a sequence indexed by ``x * n + y``
whose entries are vertex bitmasks (an ``array('Q')`` on the compiled path,
a list of ints otherwise).
"""

from __future__ import annotations

import os
from array import array

from . import pure

_compiled = None
if not os.environ.get("PARTIALCUBE_PURE"):
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_COMPILED_MAX_N = 64


def backend_name() -> str:
    return "compiled" if _compiled is not None else "pure"


def compiled_module():
    """The compiled kernel module, or None when unavailable."""
    return _compiled


def _use_compiled(n: int) -> bool:
    return _compiled is not None and n <= _COMPILED_MAX_N


def _as_words(itable):
    if isinstance(itable, array):
        return itable
    return array("Q", itable)


def bfs_all_pairs(n, adj):
    if _use_compiled(n):
        return _compiled.bfs_all_pairs(n, list(adj))
    return pure.bfs_all_pairs(n, list(adj))


def interval_table(n, dist):
    if _use_compiled(n):
        return _compiled.interval_table(n, list(dist))
    return pure.interval_table(n, list(dist))


def pre_hull_mask(n, itable, mask):
    if _use_compiled(n):
        return _compiled.pre_hull_mask(n, _as_words(itable), mask)
    return pure.pre_hull_mask(n, itable, mask)


def hull_mask(n, itable, mask):
    if _use_compiled(n):
        return _compiled.hull_mask(n, _as_words(itable), mask)
    return pure.hull_mask(n, itable, mask)


def hull_family(n, itable):
    if _use_compiled(n) and n <= 28:
        return _compiled.hull_family(n, _as_words(itable))
    return pure.hull_family(n, itable)
