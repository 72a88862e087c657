# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled residue sieve over a contiguous numerator range."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def sieve_range(long long lo, long long hi,
                const long long[::1] moduli,
                const unsigned char[::1] tables,
                const long long[::1] offsets):
    """Return every ``a`` in ``[lo, hi]`` whose residue passes all tables.

    ``tables[offsets[i] + (a mod moduli[i])]`` is nonzero when the residue
    class can still hold a perfect square.
    """
    cdef Py_ssize_t nm = moduli.shape[0]
    cdef Py_ssize_t i, n = 0
    cdef long long a, m, r
    cdef bint ok
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    cdef Py_ssize_t cap = 1024
    out = np.empty(cap, dtype=np.int64)
    cdef long long[::1] buf = out
    a = lo
    while a <= hi:
        ok = True
        for i in range(nm):
            m = moduli[i]
            r = a % m
            if r < 0:
                r += m
            if not tables[offsets[i] + r]:
                ok = False
                break
        if ok:
            if n == cap:
                cap *= 2
                out = np.resize(out, cap)
                buf = out
            buf[n] = a
            n += 1
        a += 1
    return out[:n].copy()
