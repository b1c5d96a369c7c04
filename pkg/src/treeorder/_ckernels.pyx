# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the reference."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def rise_matrix(const cnp.int64_t[:] start, const cnp.int64_t[:] nbr,
                const cnp.int64_t[:] sign, const cnp.int64_t[:] rank_here,
                const cnp.int64_t[:] rank_there):
    cdef Py_ssize_t n = start.shape[0] - 1
    out = np.zeros((n, n), dtype=np.int64)
    cdef cnp.int64_t[:, :] o = out
    cdef cnp.int64_t[:] sv = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int64_t[:] sp = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int64_t[:] sa = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int64_t[:] sr = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t src, top, k
    cdef cnp.int64_t v, pred, arrived, r, w, step
    for src in range(n):
        top = 0
        sv[0] = src; sp[0] = -1; sa[0] = -1; sr[0] = 0
        top = 1
        while top > 0:
            top -= 1
            v = sv[top]; pred = sp[top]; arrived = sa[top]; r = sr[top]
            o[src, v] = r
            for k in range(start[v], start[v + 1]):
                w = nbr[k]
                if w == pred:
                    continue
                step = r + sign[k]
                if arrived >= 0:
                    if arrived < rank_here[k]:
                        step += 1
                    else:
                        step -= 1
                sv[top] = w; sp[top] = v; sa[top] = rank_there[k]; sr[top] = step
                top += 1
    return out


def check_rise_matrix(m):
    cdef const cnp.int64_t[:, :] r = np.ascontiguousarray(m, dtype=np.int64)
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t i, j, k
    cdef cnp.int64_t x, s
    for i in range(n):
        if r[i, i] != 0:
            return 3, i, i, -1
        for j in range(n):
            if i == j:
                continue
            x = r[i, j]
            if x == 0:
                return 1, i, j, -1
            if x % 2 == 0:
                return 2, i, j, -1
            if x != -r[j, i]:
                return 3, i, j, -1
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                s = r[i, j] + r[j, k] + r[k, i]
                if s > 1:
                    return 5, i, j, k
                if s != 1 and s != -1:
                    return 4, i, j, k
                if r[i, j] > 0 and r[j, k] > 0 and r[i, k] <= 0:
                    return 6, i, j, k
    return 0, -1, -1, -1


def tau_u_codes(tuple codes, tuple pos):
    cdef Py_ssize_t n = len(codes)
    cdef Py_ssize_t i
    cdef long x, y, t = 0
    cdef long p[64]
    cdef Py_ssize_t m = len(pos)
    if n == 0:
        return 0
    if m > 64:
        from treeorder._pykernels import tau_u_codes as slow
        return slow(codes, pos)
    for i in range(m):
        p[i] = pos[i]
    x = codes[0]
    for i in range(1, n):
        y = codes[i]
        if x & 1 == 0:
            if p[x ^ 1] < p[y]:
                t += 1
        else:
            if p[y] < p[x ^ 1]:
                t -= 1
        x = y
    return 2 * t + (-1 if x & 1 else 1)


def cayley_rise_codes(tuple a, tuple b, tuple pos):
    cdef Py_ssize_t na = len(a), nb = len(b), c = 0, i
    cdef Py_ssize_t m = len(pos)
    cdef long code, prev = -1, total = 0
    cdef long p[64]
    if m > 64:
        from treeorder._pykernels import cayley_rise_codes as slow
        return slow(a, b, pos)
    for i in range(m):
        p[i] = pos[i]
    while c < na and c < nb and a[c] == b[c]:
        c += 1
    for i in range(na - 1, c - 1, -1):
        code = <long>a[i] ^ 1
        total += -1 if code & 1 else 1
        if prev >= 0:
            total += 1 if p[prev ^ 1] < p[code] else -1
        prev = code
    for i in range(c, nb):
        code = b[i]
        total += -1 if code & 1 else 1
        if prev >= 0:
            total += 1 if p[prev ^ 1] < p[code] else -1
        prev = code
    return total
