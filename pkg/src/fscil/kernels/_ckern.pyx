# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense kernels: matrix product and Cholesky factor/solve.

Loop order and arithmetic are mirrored exactly by the pure-Python
backend in ``_pykern``; both must produce bitwise-identical results
(the extension is compiled with FMA contraction disabled for this
reason). Keep the two files in sync when touching either.
"""

from libc.math cimport sqrt


def matmul(double[:, ::1] a, double[:, ::1] b, double[:, ::1] out):
    """out += a @ b with a fixed i-k-j accumulation order."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p = a.shape[1]
    cdef Py_ssize_t m = b.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double aik
    for i in range(n):
        for k in range(p):
            aik = a[i, k]
            for j in range(m):
                out[i, j] += aik * b[k, j]


def cholesky_factor(double[:, ::1] a, double[:, ::1] lo):
    """Lower Cholesky factor of symmetric positive definite ``a``.

    Writes L into ``lo`` (must be zero-initialised) and returns -1 on
    success, or the index of the first non-positive pivot. Only the
    lower triangle of ``a`` is read.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double s, t, d
    for j in range(n):
        s = a[j, j]
        for k in range(j):
            s -= lo[j, k] * lo[j, k]
        if not s > 0.0:  # catches <= 0 and NaN
            return j
        d = sqrt(s)
        lo[j, j] = d
        for i in range(j + 1, n):
            t = a[i, j]
            for k in range(j):
                t -= lo[i, k] * lo[j, k]
            lo[i, j] = t / d
    return -1


def cholesky_solve(double[:, ::1] lo, double[:, ::1] b, double[:, ::1] out):
    """Solve (L L^T) X = B column by column given the lower factor L."""
    cdef Py_ssize_t n = lo.shape[0]
    cdef Py_ssize_t r = b.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double t
    for j in range(r):
        for i in range(n):
            t = b[i, j]
            for k in range(i):
                t -= lo[i, k] * out[k, j]
            out[i, j] = t / lo[i, i]
        for i in range(n - 1, -1, -1):
            t = out[i, j]
            for k in range(i + 1, n):
                t -= lo[k, i] * out[k, j]
            out[i, j] = t / lo[i, i]
