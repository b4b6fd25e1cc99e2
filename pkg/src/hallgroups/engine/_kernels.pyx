# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: batched element products and bounded subgroup closure.

Elements are rows of a permutation table. A product is located by hashing
the images of a base into an int64 key and binary-searching the sorted key
array, whose order is also the element numbering.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint16_t

cnp.import_array()


cdef inline Py_ssize_t _lookup(const int64_t[::1] keys, int64_t key) nogil:
    cdef Py_ssize_t lo = 0, hi = keys.shape[0] - 1, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if keys[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t _mul(const uint16_t[:, ::1] perms, const Py_ssize_t[::1] base,
                            const int64_t[::1] weights, const int64_t[::1] keys,
                            Py_ssize_t a, Py_ssize_t b) nogil:
    cdef Py_ssize_t j
    cdef int64_t key = 0
    for j in range(base.shape[0]):
        key += perms[b, perms[a, base[j]]] * weights[j]
    return _lookup(keys, key)


def products(const uint16_t[:, ::1] perms, const Py_ssize_t[::1] base,
             const int64_t[::1] weights, const int64_t[::1] keys,
             const int64_t[::1] a, const int64_t[::1] b):
    cdef Py_ssize_t i, n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _mul(perms, base, weights, keys, a[i], b[i])
    return out


def closure(const uint16_t[:, ::1] perms, const Py_ssize_t[::1] base,
            const int64_t[::1] weights, const int64_t[::1] keys,
            const int64_t[::1] gens, const int64_t[::1] seed, Py_ssize_t cutoff):
    """Elements of <seed, gens> in ascending order, or None past cutoff.

    seed must contain the identity; cutoff bounds the number of elements.
    """
    cdef Py_ssize_t n = keys.shape[0]
    cdef Py_ssize_t cap = min(cutoff, n)
    if seed.shape[0] > cap:
        return None
    mask_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(cap, dtype=np.int64)
    cdef unsigned char[::1] mask = mask_arr
    cdef int64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, i, k, y
    cdef int64_t x
    cdef bint overflow = False
    for i in range(seed.shape[0]):
        if not mask[seed[i]]:
            mask[seed[i]] = 1
            queue[tail] = seed[i]
            tail += 1
    with nogil:
        while head < tail and not overflow:
            x = queue[head]
            head += 1
            for k in range(gens.shape[0]):
                y = _mul(perms, base, weights, keys, x, gens[k])
                if not mask[y]:
                    if tail >= cap:
                        overflow = True
                        break
                    mask[y] = 1
                    queue[tail] = y
                    tail += 1
    if overflow:
        return None
    return np.flatnonzero(mask_arr).astype(np.int64)
