# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled path kernels; mirror of ``_pykernels`` with C integer loops.

Coordinates are small (a + b stays far below 2**31 in any feasible
enumeration), so all arithmetic is done in C long long.
"""


def first_violation(str steps, long long a, long long b):
    cdef long long x = 0, y = 0
    cdef Py_ssize_t t, n = len(steps)
    for t in range(n - 1):
        if steps[t] == "N":
            y += 1
        else:
            x += 1
        if b * y <= a * x:
            return t + 1
    return -1


cdef void _fill(long long h, long long cap, long long* nx, long long* bounds,
                long long a, list out):
    cdef long long v, top
    if h == 0:
        out.append(tuple([nx[k] for k in range(a)]))
        return
    top = bounds[h] if bounds[h] < cap else cap
    for v in range(0, top + 1):
        nx[h] = v
        _fill(h - 1, v, nx, bounds, a, out)


def enumerate_nx(long long a, long long b):
    cdef long long[64] nx
    cdef long long[64] bounds
    cdef long long h
    if a > 64:
        raise ValueError("compiled enumerate_nx supports a <= 64")
    out = []
    for h in range(a):
        nx[h] = 0
        bounds[h] = (h * b - 1) // a if h > 0 else 0
    _fill(a - 1, b, nx, bounds, a, out)
    return out


cdef inline tuple _laser_end(tuple nx, long long a, long long b, long long i, long long j):
    cdef long long h, num, leave, base = a * i
    for h in range(j + 1, a + 1):
        num = base + b * (h - j)
        leave = <long long>nx[h] if h < a else b
        if num < a * leave:
            if num <= a * <long long>nx[h - 1]:
                return (-1, num)
            return (h, num)
    return (-1, 0)


def laser_end(nx, long long a, long long b, long long i, long long j):
    return _laser_end(tuple(nx), a, b, i, j)


def laser_ends(nx, long long a, long long b):
    cdef tuple t = tuple(nx)
    cdef long long k
    return [_laser_end(t, a, b, <long long>t[k], k) for k in range(1, a)]


def assign_regions(lasers, points, long long a, long long b):
    cdef Py_ssize_t n = len(lasers), k
    cdef long long x, y, ax, by, val, best_val, sx, sy, num
    cdef int best
    cdef long long[256] SX
    cdef long long[256] SY
    cdef long long[256] NUM
    if n > 256:
        raise ValueError("compiled assign_regions supports at most 256 lasers")
    for k in range(n):
        SX[k], SY[k], NUM[k] = lasers[k]
    out = []
    for p in points:
        x, y = p
        best = -1
        best_val = -1
        ax = a * x
        by = b * y
        for k in range(n):
            sx = SX[k]
            if sx <= x and ax < NUM[k]:
                val = b * SY[k] + a * (x - sx)
                if val < by and val > best_val:
                    best_val = val
                    best = <int>k
        out.append(best)
    return out


def promote(str steps, long long a, long long b):
    cdef bytearray s = bytearray(steps, "ascii")
    cdef Py_ssize_t t, n = len(s)
    cdef long long x = 0, y = 0
    cdef unsigned char N = 78, E = 69
    for t in range(1, n):
        if s[t - 1] == N:
            y += 1
        else:
            x += 1
        if s[t - 1] != s[t]:
            if s[t - 1] == N:
                if b * (y - 1) > a * (x + 1):
                    s[t - 1] = E
                    s[t] = N
                    x += 1
                    y -= 1
            else:
                s[t - 1] = N
                s[t] = E
                x -= 1
                y += 1
    return s.decode("ascii")


def rectify_offset(word, long long a, long long b):
    cdef tuple w = tuple(word)
    cdef Py_ssize_t n = len(w), k, t
    cdef long long s
    cdef bint ok
    for k in range(n):
        s = 0
        ok = True
        for t in range(1, n):
            s += <long long>w[(k + t - 1) % n]
            if b * s <= a * t:
                ok = False
                break
        if ok:
            return k
    return -1
