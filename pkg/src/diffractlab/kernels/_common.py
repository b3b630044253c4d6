"""Shared post-processing for the kernel backends.

Both the compiled and the pure-numpy backends produce raw pair arrays in the
same (i outer, j inner) order and defer to these helpers for merging, so the
two backends return identical results for the merge-by-key paths.
"""

import numpy as np

# Tag components must fit a signed 32-bit range so a (dm, dn) pair packs into
# one uint64 key.
PACK_OFFSET = 1 << 31
_U32_MASK = np.uint64(0xFFFFFFFF)
_SHIFT = np.uint64(32)


def pack_tags(dm, dn):
    dm = np.asarray(dm, dtype=np.int64)
    dn = np.asarray(dn, dtype=np.int64)
    if dm.size and (np.abs(dm).max() >= PACK_OFFSET or np.abs(dn).max() >= PACK_OFFSET):
        raise OverflowError("tag components exceed the 32-bit packing range")
    return ((dm + PACK_OFFSET).astype(np.uint64) << _SHIFT) | (
        (dn + PACK_OFFSET).astype(np.uint64) & _U32_MASK
    )


def unpack_tags(keys):
    dm = (keys >> _SHIFT).astype(np.int64) - PACK_OFFSET
    dn = (keys & _U32_MASK).astype(np.int64) - PACK_OFFSET
    return dm, dn


def merge_by_key(keys, values, rep_pos):
    """Group complex values by exact integer key.

    Returns (unique keys, summed values, representative position), with the
    representative taken from the first occurrence in input order.
    """
    if keys.size == 0:
        return keys, values, rep_pos
    order = np.argsort(keys, kind="stable")
    k = keys[order]
    v = values[order]
    p = rep_pos[order]
    starts = np.empty(k.size, dtype=bool)
    starts[0] = True
    np.not_equal(k[1:], k[:-1], out=starts[1:])
    idx = np.flatnonzero(starts)
    return k[idx], np.add.reduceat(v, idx), p[idx]


def merge_by_tolerance(pos, values, tol):
    """Group values at positions closer than `tol` (after sorting).

    The group representative is the first (smallest) position of the group.
    """
    if pos.size == 0:
        return pos, values
    order = np.argsort(pos, kind="stable")
    p = pos[order]
    v = values[order]
    starts = np.empty(p.size, dtype=bool)
    starts[0] = True
    np.greater(np.diff(p), tol, out=starts[1:])
    idx = np.flatnonzero(starts)
    return p[idx], np.add.reduceat(v, idx)


def halfpair_windows(positions, max_lag):
    """Per-point start index of the trailing window |p_i - p_j| <= max_lag, j <= i."""
    lo = np.searchsorted(positions, positions - max_lag, side="left")
    counts = np.arange(positions.size, dtype=np.int64) - lo + 1
    return lo, counts


def check_pair_budget(total, max_pairs):
    if max_pairs is not None and total > max_pairs:
        from ..errors import AtomBudgetError

        raise AtomBudgetError(
            f"pairwise accumulation needs {total} atom pairs, budget is {max_pairs}"
        )
