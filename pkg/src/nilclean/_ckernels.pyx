# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels over F_p (p < 2**31, n <= 8).

Matrices are encoded as integers: the row-major entry list read as base-p
digits, entry (0, 0) most significant.
"""

DEF MAXN = 8
DEF MAXSQ = 64


cdef inline bint _square_equals(long long *e, int n, long long p):
    cdef int i, j, t
    cdef long long acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for t in range(n):
                acc += e[i * n + t] * e[t * n + j]
            if acc % p != e[i * n + j]:
                return False
    return True


def scan_idempotents(long long p, int n, long long start, long long stop):
    """Codes in ``[start, stop)`` whose matrix satisfies ``E @ E == E``."""
    cdef long long digits[MAXSQ]
    cdef int sq = n * n
    cdef int i
    cdef long long code, x
    if n > MAXN:
        raise ValueError("n too large for the compiled kernel")
    out = []
    if start >= stop:
        return out
    x = start
    for i in range(sq - 1, -1, -1):
        digits[i] = x % p
        x //= p
    code = start
    while code < stop:
        if _square_equals(digits, n, p):
            out.append(code)
        code += 1
        i = sq - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < p:
                break
            digits[i] = 0
            i -= 1
    return out


cdef inline void _matmul(long long *a, long long *b, long long *out, int n, long long p):
    cdef int i, j, t
    cdef long long acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for t in range(n):
                acc += a[i * n + t] * b[t * n + j]
            out[i * n + j] = acc % p


def first_nilpotent_difference(a, codes, long long p, int n):
    """Index of the first code ``E`` with ``(A - E)**n == 0``, or -1."""
    cdef long long av[MAXSQ]
    cdef long long nv[MAXSQ]
    cdef long long pw[MAXSQ]
    cdef long long tmp[MAXSQ]
    cdef int sq = n * n
    cdef int i, step, idx
    cdef long long x
    cdef bint zero
    if n > MAXN:
        raise ValueError("n too large for the compiled kernel")
    for i in range(sq):
        av[i] = a[i]
    idx = 0
    for code in codes:
        x = code
        for i in range(sq - 1, -1, -1):
            nv[i] = (av[i] - x % p + p) % p
            x //= p
        for i in range(sq):
            pw[i] = nv[i]
        zero = False
        for step in range(n):
            zero = True
            for i in range(sq):
                if pw[i]:
                    zero = False
                    break
            if zero or step == n - 1:
                break
            _matmul(pw, nv, tmp, n, p)
            for i in range(sq):
                pw[i] = tmp[i]
        if zero:
            return idx
        idx += 1
    return -1
