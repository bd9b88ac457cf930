# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch conjugation kernel. Same contract as _fallback.conjugate_inplace."""

from .tables import (
    N_SINGLE,
    PAIR_LETTER_A,
    PAIR_LETTER_B,
    PAIR_PHASE,
    SINGLE_LETTER,
    SINGLE_PHASE,
)

import numpy as np

cdef int _N_SINGLE = N_SINGLE
cdef const unsigned char[:, ::1] _SLET = np.ascontiguousarray(SINGLE_LETTER)
cdef const unsigned char[:, ::1] _SPH = np.ascontiguousarray(SINGLE_PHASE)
cdef const unsigned char[:, ::1] _PLA = np.ascontiguousarray(PAIR_LETTER_A)
cdef const unsigned char[:, ::1] _PLB = np.ascontiguousarray(PAIR_LETTER_B)
cdef const unsigned char[:, ::1] _PPH = np.ascontiguousarray(PAIR_PHASE)


def conjugate_inplace(unsigned char[:, ::1] letters,
                      unsigned char[::1] phases,
                      const int[:, ::1] ops):
    cdef Py_ssize_t g, j, n = phases.shape[0]
    cdef int code, a, b, k
    cdef unsigned char la, lb, idx
    for g in range(ops.shape[0]):
        code = ops[g, 0]
        a = ops[g, 1]
        if code < _N_SINGLE:
            for j in range(n):
                la = letters[a, j]
                phases[j] = (phases[j] + _SPH[code, la]) & 3
                letters[a, j] = _SLET[code, la]
        else:
            k = code - _N_SINGLE
            b = ops[g, 2]
            for j in range(n):
                la = letters[a, j]
                lb = letters[b, j]
                idx = (la << 2) | lb
                phases[j] = (phases[j] + _PPH[k, idx]) & 3
                letters[a, j] = _PLA[k, idx]
                letters[b, j] = _PLB[k, idx]
