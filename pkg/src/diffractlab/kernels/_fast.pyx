# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts as ``_ref``; the pair fills run in C and avoid the large
index temporaries of the numpy backend, the exponential sums avoid the
(omega x position) phase matrix.
"""

import numpy as np

from . import _common
from ..errors import AtomBudgetError

from libc.math cimport cos, sin


def exp_sums(positions, weights, omegas):
    cdef double[::1] pos = np.ascontiguousarray(positions, dtype=np.float64)
    cdef double complex[::1] w = np.ascontiguousarray(weights, dtype=np.complex128)
    om_arr = np.atleast_1d(np.ascontiguousarray(omegas, dtype=np.float64))
    cdef double[::1] om = om_arr
    out = np.zeros(om_arr.size, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t n = pos.shape[0], f = om.shape[0]
    cdef Py_ssize_t i, k
    cdef double ph, c, s, a
    cdef double complex acc
    for k in range(f):
        a = -6.283185307179586476925287 * om[k]
        acc = 0
        for i in range(n):
            ph = a * pos[i]
            acc = acc + w[i] * (cos(ph) + 1j * sin(ph))
        o[k] = acc
    return out


def autocorr_lattice(indices, weights, max_lag_units, max_pairs=None):
    cdef long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef double complex[::1] w = np.ascontiguousarray(weights, dtype=np.complex128)
    cdef long long L = int(max_lag_units)
    out = np.zeros(2 * L + 1, dtype=np.complex128)
    cdef double complex[::1] acc = out
    cdef Py_ssize_t n = idx.shape[0]
    if n == 0:
        return out
    cdef Py_ssize_t i, j, lo = 0
    cdef long long budget = -1 if max_pairs is None else int(max_pairs)
    cdef long long total = 0
    cdef double complex wi
    for i in range(n):
        while idx[i] - idx[lo] > L:
            lo += 1
        total += i - lo + 1
        if budget >= 0 and total > budget:
            raise AtomBudgetError(
                f"pairwise accumulation exceeds the {budget}-pair budget"
            )
        wi = w[i]
        for j in range(lo, i):
            acc[idx[i] - idx[j] + L] = acc[idx[i] - idx[j] + L] + wi * w[j].conjugate()
        acc[L] = acc[L] + wi * wi.conjugate()
    for j in range(1, L + 1):
        acc[L - j] = acc[L + j].conjugate()
    return out


def pair_accumulate_tagged(ms, ns, positions, weights, max_lag, max_pairs=None):
    cdef double[::1] pos = np.ascontiguousarray(positions, dtype=np.float64)
    cdef double complex[::1] w = np.ascontiguousarray(weights, dtype=np.complex128)
    cdef long long[::1] m = np.ascontiguousarray(ms, dtype=np.int64)
    cdef long long[::1] nn = np.ascontiguousarray(ns, dtype=np.int64)
    cdef Py_ssize_t n = pos.shape[0]
    if n == 0:
        return (
            np.empty(0, np.int64),
            np.empty(0, np.int64),
            np.empty(0),
            np.empty(0, np.complex128),
        )
    cdef long long total = _count_pairs(pos, float(max_lag), max_pairs)
    keys_arr = np.empty(total, dtype=np.uint64)
    vals_arr = np.empty(total, dtype=np.complex128)
    rpos_arr = np.empty(total, dtype=np.float64)
    cdef unsigned long long[::1] keys = keys_arr
    cdef double complex[::1] vals = vals_arr
    cdef double[::1] rpos = rpos_arr
    cdef double lag = float(max_lag)
    cdef Py_ssize_t i, j, lo = 0
    cdef long long k = 0, OFF = 1 << 31
    cdef double complex wi
    for i in range(n):
        while pos[i] - pos[lo] > lag:
            lo += 1
        wi = w[i]
        for j in range(lo, i + 1):
            keys[k] = (<unsigned long long> (m[i] - m[j] + OFF) << 32) | (
                <unsigned long long> (nn[i] - nn[j] + OFF) & 0xFFFFFFFFULL
            )
            vals[k] = wi * w[j].conjugate()
            rpos[k] = pos[i] - pos[j]
            k += 1
    key_u, val_u, pos_u = _common.merge_by_key(keys_arr, vals_arr, rpos_arr)
    dm, dn = _common.unpack_tags(key_u)
    return dm, dn, pos_u, val_u


def pair_accumulate_float(positions, weights, max_lag, merge_tol, max_pairs=None):
    cdef double[::1] pos = np.ascontiguousarray(positions, dtype=np.float64)
    cdef double complex[::1] w = np.ascontiguousarray(weights, dtype=np.complex128)
    cdef Py_ssize_t n = pos.shape[0]
    if n == 0:
        return np.empty(0), np.empty(0, np.complex128)
    cdef long long total = _count_pairs(pos, float(max_lag), max_pairs)
    dpos_arr = np.empty(total, dtype=np.float64)
    vals_arr = np.empty(total, dtype=np.complex128)
    cdef double[::1] dpos = dpos_arr
    cdef double complex[::1] vals = vals_arr
    cdef double lag = float(max_lag)
    cdef Py_ssize_t i, j, lo = 0
    cdef long long k = 0
    cdef double complex wi
    for i in range(n):
        while pos[i] - pos[lo] > lag:
            lo += 1
        wi = w[i]
        for j in range(lo, i + 1):
            dpos[k] = pos[i] - pos[j]
            vals[k] = wi * w[j].conjugate()
            k += 1
    return _common.merge_by_tolerance(dpos_arr, vals_arr, float(merge_tol))


cdef long long _count_pairs(double[::1] pos, double lag, max_pairs) except -1:
    cdef Py_ssize_t i, lo = 0
    cdef long long total = 0
    cdef long long budget = -1 if max_pairs is None else int(max_pairs)
    for i in range(pos.shape[0]):
        while pos[i] - pos[lo] > lag:
            lo += 1
        total += i - lo + 1
        if budget >= 0 and total > budget:
            raise AtomBudgetError(
                f"pairwise accumulation exceeds the {budget}-pair budget"
            )
    return total
