"""Backend selection for the counting and enumeration kernels.

The compiled extension homcert._kernels is used when it imported cleanly
and the arguments fit its fixed-width arithmetic (64-vertex masks, counts
provably below 2**63).  Everything else falls back to the pure-Python
reference in homcert._pykernels, which has no size limits beyond memory.
"""

from __future__ import annotations

from homcert import _pykernels

try:
    from homcert import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "c" if _compiled is not None else "python"

_MASK_LIMIT = 64
_PATTERN_LIMIT = 48


def _fits_counting(h_rows, g_rows):
    if _compiled is None:
        return False
    k = len(h_rows)
    n = len(g_rows)
    if k > _PATTERN_LIMIT or n > _MASK_LIMIT:
        return False
    # n**k bounds both counts; staying under 2**62 leaves headroom.
    return k * max(n, 2).bit_length() <= 62


def hom_count(h_rows, g_rows):
    if _fits_counting(h_rows, g_rows):
        return _compiled.hom_count(h_rows, g_rows)
    return _pykernels.hom_count(h_rows, g_rows)


def inj_count(h_rows, g_rows):
    if _fits_counting(h_rows, g_rows):
        return _compiled.inj_count(h_rows, g_rows)
    return _pykernels.inj_count(h_rows, g_rows)


def canonical_min_rows(rows):
    if _compiled is not None and len(rows) <= _MASK_LIMIT:
        return _compiled.canonical_min_rows(rows)
    return _pykernels.canonical_min_rows(rows)


def is_canonical_max(rows, budget=_pykernels.CANON_BUDGET):
    if _compiled is not None and len(rows) <= _MASK_LIMIT:
        return _compiled.is_canonical_max(rows, budget)
    return _pykernels.is_canonical_max(rows, budget)


def enumerate_regular_rows(n, d, budget=_pykernels.CANON_BUDGET):
    if _compiled is not None and n <= _MASK_LIMIT:
        return _compiled.enumerate_regular_rows(n, d, budget)
    return _pykernels.enumerate_regular_rows(n, d, budget)
