# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled closure kernel; mirrors ``_pykernel`` exactly.

See the pure module for the algorithm notes.  Tables are uint16, which
caps ring sizes at 65535 elements; the constructors enforce far smaller
bounds anyway.
"""

import numpy as np

cimport numpy as cnp


def prepare(add, mul):
    a = np.ascontiguousarray(add, dtype=np.uint16)
    m = np.ascontiguousarray(mul, dtype=np.uint16)
    return a, m


def closure(prep, Py_ssize_t size, bytes base_mask, tuple base_gens, tuple seeds):
    cdef const cnp.uint16_t[:, ::1] add = prep[0]
    cdef const cnp.uint16_t[:, ::1] mul = prep[1]

    out = np.frombuffer(base_mask, dtype=np.uint8).copy()
    cdef cnp.uint8_t[::1] H = out

    members_arr = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] members = members_arr
    cdef Py_ssize_t n_members = 0

    # The additive rank is at most log2(size) <= 16; 64 leaves headroom.
    cdef cnp.int32_t gens[64]
    cdef Py_ssize_t n_gens = 0

    queue_arr = np.empty(size + 4160, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef Py_ssize_t n_queue = 0

    cdef Py_ssize_t i, j, limit
    cdef Py_ssize_t x, y, t

    for i in range(size):
        if H[i]:
            members[n_members] = i
            n_members += 1
    for g in base_gens:
        if n_gens >= 64:
            raise OverflowError("generator list overflow")
        gens[n_gens] = g
        n_gens += 1
    for s in seeds:
        queue[n_queue] = s
        n_queue += 1

    while n_queue:
        n_queue -= 1
        x = queue[n_queue]
        if H[x]:
            continue
        limit = n_members  # snapshot: cosets are taken over the old H
        y = x
        while not H[y]:
            for j in range(limit):
                t = add[y, members[j]]
                H[t] = 1
                members[n_members] = t
                n_members += 1
            y = add[y, x]
        if n_gens >= 64:
            raise OverflowError("generator list overflow")
        gens[n_gens] = x
        n_gens += 1
        for j in range(n_gens):
            t = mul[x, gens[j]]
            if not H[t]:
                queue[n_queue] = t
                n_queue += 1

    return out.tobytes(), tuple(int(gens[j]) for j in range(n_gens))
