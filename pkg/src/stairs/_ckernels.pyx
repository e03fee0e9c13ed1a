# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled series kernels; same contracts as ``_pykernels``.

Coefficients stay Python ints so results are exact at any size; the win
is dropping interpreter dispatch from the inner loops.
"""
from cpython.list cimport PyList_GET_ITEM, PyList_SET_ITEM
from cpython.ref cimport Py_INCREF, Py_DECREF
from cpython.number cimport PyNumber_Add, PyNumber_Subtract


cdef inline void _set(list c, Py_ssize_t i, object v):
    cdef object old = <object>PyList_GET_ITEM(c, i)
    Py_INCREF(v)
    PyList_SET_ITEM(c, i, v)
    Py_DECREF(old)


cdef void _add_shifted(list c, Py_ssize_t s):
    cdef Py_ssize_t i, n = len(c)
    for i in range(s, n):
        _set(c, i, PyNumber_Add(<object>PyList_GET_ITEM(c, i),
                                <object>PyList_GET_ITEM(c, i - s)))


cdef void _sub_shifted(list c, Py_ssize_t j):
    cdef Py_ssize_t i = len(c) - 1
    while i >= j:
        _set(c, i, PyNumber_Subtract(<object>PyList_GET_ITEM(c, i),
                                     <object>PyList_GET_ITEM(c, i - j)))
        i -= 1


def add_shifted(list c, Py_ssize_t s):
    if s < 1:
        raise ValueError("shift must be >= 1")
    _add_shifted(c, s)


def sub_shifted(list c, Py_ssize_t j):
    if j < 1:
        raise ValueError("shift must be >= 1")
    _sub_shifted(c, j)


def apply_factors(list c, steps, limit):
    cdef Py_ssize_t n = len(c) - 1
    cdef Py_ssize_t s, j
    cdef bint capped = limit is not None
    cdef Py_ssize_t m = limit if capped else 0
    for s in steps:
        if s < 1:
            raise ValueError("step sizes must be >= 1")
        _add_shifted(c, s)
        if capped:
            j = (m + 1) * s
            if j <= n:
                _sub_shifted(c, j)


def compositions(Py_ssize_t n, steps):
    cdef list st = list(steps)
    cdef Py_ssize_t k = len(st)
    cdef Py_ssize_t i, t, s
    cdef object acc
    cdef list c = [0] * (n + 1)
    c[0] = 1
    for i in range(1, n + 1):
        acc = 0
        for t in range(k):
            s = st[t]
            if s > i:
                break
            acc = PyNumber_Add(acc, <object>PyList_GET_ITEM(c, i - s))
        _set(c, i, acc)
    return c
