# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense kernels for integer Laurent polynomial arithmetic.

Same contract as ``_kernels_py``. Coefficients stay Python integers so
no precision is lost; the speedup comes from typed loop indices and list
access without bounds checks.
"""


def mul_dense(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef object bj
    cdef list out
    if na == 0 or nb == 0:
        return []
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    out = [0] * (na + nb - 1)
    for j in range(nb):
        bj = b[j]
        if bj == 0:
            continue
        for i in range(na):
            out[i + j] = out[i + j] + a[i] * bj
    return out


def divexact_dense(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, k, nq
    cdef object lead, top, c, r
    cdef list rem, quot
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if na < nb:
        for i in range(na):
            if a[i] != 0:
                raise ArithmeticError("not divisible")
        return []
    rem = list(a)
    lead = b[nb - 1]
    nq = na - nb + 1
    quot = [0] * nq
    for k in range(nq - 1, -1, -1):
        top = rem[k + nb - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r != 0:
            raise ArithmeticError("not divisible")
        quot[k] = c
        for i in range(nb):
            rem[k + i] = rem[k + i] - c * b[i]
    for i in range(nb - 1):
        if rem[i] != 0:
            raise ArithmeticError("not divisible")
    return quot


def axpy_dense(list acc, Py_ssize_t offset, object c, list a):
    cdef Py_ssize_t i, n = len(a)
    cdef object ai
    for i in range(n):
        ai = a[i]
        if ai != 0:
            acc[offset + i] = acc[offset + i] + c * ai
