"""Pure numpy implementations of the hot kernels.

This backend is always importable and is the reference for correctness; the
compiled backend in ``_fast.pyx`` must agree with it (exactly for the merge
paths, to rounding for the exponential sums).
"""

import numpy as np

from . import _common

# Cap on materialized pairs per chunk, keeps peak memory around ~500 MB.
_CHUNK_PAIRS = 16_000_000


def exp_sums(positions, weights, omegas):
    """Character sums sum_t c_t * exp(-2*pi*i*omega*t) for each omega."""
    positions = np.ascontiguousarray(positions, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.complex128)
    omegas = np.atleast_1d(np.ascontiguousarray(omegas, dtype=np.float64))
    out = np.zeros(omegas.size, dtype=np.complex128)
    if positions.size == 0 or omegas.size == 0:
        return out
    chunk = max(1, _CHUNK_PAIRS // max(1, omegas.size))
    for start in range(0, positions.size, chunk):
        p = positions[start : start + chunk]
        w = weights[start : start + chunk]
        phases = np.exp(np.outer(omegas, p) * (-2j * np.pi))
        out += phases @ w
    return out


def autocorr_lattice(indices, weights, max_lag_units, max_pairs=None):
    """Pair accumulation for combs supported on an arithmetic progression.

    `indices` are the sorted integer lattice coordinates; returns the dense
    complex accumulation over differences -L..L (length 2L+1), where entry
    [d + L] holds sum over pairs with index difference d of w_i * conj(w_j).
    """
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    weights = np.ascontiguousarray(weights, dtype=np.complex128)
    L = int(max_lag_units)
    acc = np.zeros(2 * L + 1, dtype=np.complex128)
    n = indices.size
    if n == 0:
        return acc
    lo, counts = _common.halfpair_windows(indices, L)
    total = int(counts.sum())
    _common.check_pair_budget(total, max_pairs)
    # Process i-ranges whose half-window pairs fit the chunk budget.
    cum = np.cumsum(counts)
    start = 0
    re = np.zeros(2 * L + 1)
    im = np.zeros(2 * L + 1)
    while start < n:
        base = cum[start - 1] if start else 0
        stop = int(np.searchsorted(cum, base + _CHUNK_PAIRS, side="right"))
        stop = max(stop, start + 1)
        i_idx, j_idx = _expand_windows(lo, counts, start, stop)
        d = indices[i_idx] - indices[j_idx] + L
        v = weights[i_idx] * np.conj(weights[j_idx])
        re += np.bincount(d, weights=v.real, minlength=2 * L + 1)
        im += np.bincount(d, weights=v.imag, minlength=2 * L + 1)
        start = stop
    acc = re + 1j * im
    # j <= i only covers d >= 0; mirror the strict part hermitianly.
    acc[:L] = np.conj(acc[L + 1 :][::-1])
    return acc


def pair_accumulate_tagged(ms, ns, positions, weights, max_lag, max_pairs=None):
    """Half-spectrum pair accumulation merged exactly on integer tag pairs.

    Returns (dm, dn, dpos, dval) for ordered pairs j <= i within `max_lag`,
    so dpos >= 0; dval accumulates w_i * conj(w_j). Sorted by packed tag key.
    """
    positions = np.ascontiguousarray(positions, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.complex128)
    ms = np.ascontiguousarray(ms, dtype=np.int64)
    ns = np.ascontiguousarray(ns, dtype=np.int64)
    if positions.size == 0:
        empty = np.empty(0)
        return (np.empty(0, np.int64), np.empty(0, np.int64), empty, np.empty(0, np.complex128))
    lo, counts = _common.halfpair_windows(positions, float(max_lag))
    _common.check_pair_budget(int(counts.sum()), max_pairs)
    cum = np.cumsum(counts)
    keys_parts, val_parts, pos_parts = [], [], []
    start = 0
    n = positions.size
    while start < n:
        base = cum[start - 1] if start else 0
        stop = int(np.searchsorted(cum, base + _CHUNK_PAIRS, side="right"))
        stop = max(stop, start + 1)
        i_idx, j_idx = _expand_windows(lo, counts, start, stop)
        keys = _common.pack_tags(ms[i_idx] - ms[j_idx], ns[i_idx] - ns[j_idx])
        vals = weights[i_idx] * np.conj(weights[j_idx])
        rpos = positions[i_idx] - positions[j_idx]
        k, v, p = _common.merge_by_key(keys, vals, rpos)
        keys_parts.append(k)
        val_parts.append(v)
        pos_parts.append(p)
        start = stop
    k, v, p = _common.merge_by_key(
        np.concatenate(keys_parts), np.concatenate(val_parts), np.concatenate(pos_parts)
    )
    dm, dn = _common.unpack_tags(k)
    return dm, dn, p, v


def pair_accumulate_float(positions, weights, max_lag, merge_tol, max_pairs=None):
    """Half-spectrum pair accumulation merged by position tolerance.

    Returns (dpos, dval) with dpos >= 0 sorted ascending.
    """
    positions = np.ascontiguousarray(positions, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.complex128)
    if positions.size == 0:
        return np.empty(0), np.empty(0, np.complex128)
    lo, counts = _common.halfpair_windows(positions, float(max_lag))
    _common.check_pair_budget(int(counts.sum()), max_pairs)
    cum = np.cumsum(counts)
    pos_parts, val_parts = [], []
    start = 0
    n = positions.size
    while start < n:
        base = cum[start - 1] if start else 0
        stop = int(np.searchsorted(cum, base + _CHUNK_PAIRS, side="right"))
        stop = max(stop, start + 1)
        i_idx, j_idx = _expand_windows(lo, counts, start, stop)
        dpos = positions[i_idx] - positions[j_idx]
        vals = weights[i_idx] * np.conj(weights[j_idx])
        p, v = _common.merge_by_tolerance(dpos, vals, merge_tol)
        pos_parts.append(p)
        val_parts.append(v)
        start = stop
    return _common.merge_by_tolerance(
        np.concatenate(pos_parts), np.concatenate(val_parts), merge_tol
    )


def _expand_windows(lo, counts, start, stop):
    """Index arrays for all (i, j) with start <= i < stop, lo[i] <= j <= i."""
    c = counts[start:stop]
    i_idx = np.repeat(np.arange(start, stop, dtype=np.int64), c)
    offsets = np.arange(i_idx.size, dtype=np.int64) - np.repeat(
        np.cumsum(c) - c, c
    )
    j_idx = np.repeat(lo[start:stop], c) + offsets
    return i_idx, j_idx
