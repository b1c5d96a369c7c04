"""Pure-Python versions of the hot loops; same signatures as ``_ckernels``."""

import numpy as np


def rise_matrix(start, nbr, sign, rank_here, rank_there):
    n = len(start) - 1
    start = [int(s) for s in start]
    nbr = [int(s) for s in nbr]
    sign = [int(s) for s in sign]
    rank_here = [int(s) for s in rank_here]
    rank_there = [int(s) for s in rank_there]
    out = np.zeros((n, n), dtype=np.int64)
    for src in range(n):
        row = [0] * n
        # (vertex, predecessor, rank at vertex of the edge we arrived by, rise so far)
        stack = [(src, -1, -1, 0)]
        while stack:
            v, pred, arrived, r = stack.pop()
            row[v] = r
            for k in range(start[v], start[v + 1]):
                w = nbr[k]
                if w == pred:
                    continue
                step = r + sign[k]
                if arrived >= 0:
                    step += 1 if arrived < rank_here[k] else -1
                stack.append((w, v, rank_there[k], step))
        out[src, :] = row
    return out


def check_rise_matrix(m):
    """Return ``(code, i, j, k)``; code 0 means every axiom holds."""
    n = m.shape[0]
    rows = m.tolist()
    for i in range(n):
        ri = rows[i]
        if ri[i] != 0:
            return 3, i, i, -1
        for j in range(n):
            if i == j:
                continue
            r = ri[j]
            if r == 0:
                return 1, i, j, -1
            if r % 2 == 0:
                return 2, i, j, -1
            if r != -rows[j][i]:
                return 3, i, j, -1
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            if j == i:
                continue
            rij = ri[j]
            rj = rows[j]
            for k in range(n):
                if k == i or k == j:
                    continue
                s = rij + rj[k] + rows[k][i]
                if s > 1:
                    return 5, i, j, k
                if s != 1 and s != -1:
                    return 4, i, j, k
                if rij > 0 and rj[k] > 0 and ri[k] <= 0:
                    return 6, i, j, k
    return 0, -1, -1, -1


def tau_u_codes(codes, pos):
    """Digram weight plus last-letter sign for a reduced word given as letter codes.

    ``pos[c]`` is the position of letter code ``c`` in the defining word;
    ``c ^ 1`` is the inverse letter.
    """
    n = len(codes)
    if n == 0:
        return 0
    t = 0
    for i in range(n - 1):
        x = codes[i]
        y = codes[i + 1]
        if x & 1 == 0:
            # ab^-1 and ab: count when a^-1 precedes the second letter
            if pos[x ^ 1] < pos[y]:
                t += 1
        else:
            # a^-1 b and a^-1 b^-1: count when the second letter precedes a
            if pos[y] < pos[x ^ 1]:
                t -= 1
    return 2 * t + (-1 if codes[n - 1] & 1 else 1)


def cayley_rise_codes(a, b, pos):
    """Rise index from word ``a`` to word ``b`` in the Cayley tree."""
    na = len(a)
    nb = len(b)
    c = 0
    while c < na and c < nb and a[c] == b[c]:
        c += 1
    total = 0
    prev = -1
    for i in range(na - 1, c - 1, -1):
        code = a[i] ^ 1
        total += -1 if code & 1 else 1
        if prev >= 0:
            total += 1 if pos[prev ^ 1] < pos[code] else -1
        prev = code
    for i in range(c, nb):
        code = b[i]
        total += -1 if code & 1 else 1
        if prev >= 0:
            total += 1 if pos[prev ^ 1] < pos[code] else -1
        prev = code
    return total
