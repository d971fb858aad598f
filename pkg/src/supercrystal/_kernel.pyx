# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tensor-fold kernel; mirrors ``_kernel_py`` function for function."""

from cpython.tuple cimport PyTuple_GET_SIZE, PyTuple_GET_ITEM


cdef inline int _at(tuple word, Py_ssize_t k):
    return <int><object>PyTuple_GET_ITEM(word, k)


cdef void _fold(tuple word, int lo, int lo_odd, int iso,
                int *E_out, int *F_out, Py_ssize_t *epos_out, Py_ssize_t *fpos_out):
    cdef Py_ssize_t r = PyTuple_GET_SIZE(word)
    cdef Py_ssize_t k, pos, epos, fpos
    cdef int hi = lo + 1
    cdef int ell = -1 if lo_odd else 1
    cdef int p_lo = ell
    cdef int p_hi = ell if iso else -ell
    cdef int b, E, F, p, e2, f2, c
    if r == 0:
        E_out[0] = 0; F_out[0] = 0; epos_out[0] = -1; fpos_out[0] = -1
        return
    b = _at(word, 0)
    if b == lo:
        E = 0; F = 1; p = p_lo
    elif b == hi:
        E = 1; F = 0; p = p_hi
    else:
        E = 0; F = 0; p = 0

    if iso:
        pos = 0
        for k in range(1, r):
            b = _at(word, k)
            if b == lo:
                c = p_lo
            elif b == hi:
                c = p_hi
            else:
                c = 0
            if not ((ell == 1 and p != 0) or (ell == -1 and c == 0)):
                pos = k
            p += c
        b = _at(word, pos)
        if b == hi:
            E_out[0] = 1; F_out[0] = 0; epos_out[0] = pos; fpos_out[0] = -1
        elif b == lo:
            E_out[0] = 0; F_out[0] = 1; epos_out[0] = -1; fpos_out[0] = pos
        else:
            E_out[0] = 0; F_out[0] = 0; epos_out[0] = -1; fpos_out[0] = -1
        return

    epos = 0
    fpos = 0
    for k in range(1, r):
        b = _at(word, k)
        if b == lo:
            e2 = 0; f2 = 1; c = p_lo
        elif b == hi:
            e2 = 1; f2 = 0; c = p_hi
        else:
            e2 = 0; f2 = 0; c = 0
        if ell == 1:
            if F < e2:
                epos = k
            if F <= e2:
                fpos = k
            E = E if E >= e2 - p else e2 - p
            F = F + c if F + c >= f2 else f2
        else:
            if not f2 < E:
                epos = k
            if not f2 <= E:
                fpos = k
            F = F if F >= f2 - p else f2 - p
            E = E + c if E + c >= e2 else e2
        p += c
    if _at(word, epos) != hi:
        epos = -1
    if _at(word, fpos) != lo:
        fpos = -1
    E_out[0] = E; F_out[0] = F; epos_out[0] = epos; fpos_out[0] = fpos


cdef tuple _replace(tuple word, Py_ssize_t pos, int value):
    return word[:pos] + (value,) + word[pos + 1:]


def fold(tuple word, int lo, int lo_odd, int iso):
    cdef int E, F
    cdef Py_ssize_t epos, fpos
    _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
    return E, F, epos, fpos


def act(tuple word, int lo, int lo_odd, int iso, bint lower):
    cdef int E, F
    cdef Py_ssize_t epos, fpos
    _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
    if lower:
        if fpos < 0:
            return None
        return _replace(word, fpos, lo + 1)
    if epos < 0:
        return None
    return _replace(word, epos, lo)


def string(tuple word, int lo, int lo_odd, int iso):
    cdef int E, F
    cdef Py_ssize_t epos, fpos
    _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
    return E, F


def moves(tuple word, tuple params):
    cdef int E, F, lo
    cdef Py_ssize_t epos, fpos
    cdef list out = []
    for lo in range(len(params)):
        lo_odd, iso = params[lo]
        _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
        if epos >= 0:
            out.append((lo, 0, _replace(word, epos, lo)))
        if fpos >= 0:
            out.append((lo, 1, _replace(word, fpos, lo + 1)))
    return out


def is_highest(tuple word, tuple params):
    cdef int E, F, lo
    cdef Py_ssize_t epos, fpos
    for lo in range(len(params)):
        lo_odd, iso = params[lo]
        _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
        if epos >= 0:
            return False
    return True


def signature(tuple word, tuple params):
    cdef int E, F, lo
    cdef Py_ssize_t epos, fpos
    cdef list out = []
    for lo in range(len(params)):
        lo_odd, iso = params[lo]
        _fold(word, lo, lo_odd, iso, &E, &F, &epos, &fpos)
        out.append((E, F))
    return tuple(out)
