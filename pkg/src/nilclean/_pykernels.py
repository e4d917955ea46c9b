"""NumPy fallback for the compiled kernels in ``_ckernels.pyx``.

Same contract and encoding: row-major base-p digits, entry (0, 0) most
significant.
"""

import numpy as np

CHUNK = 1 << 18


def _decode(codes: np.ndarray, p: int, n: int) -> np.ndarray:
    sq = n * n
    weights = p ** np.arange(sq - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // weights[None, :]) % p).reshape(-1, n, n)


def scan_idempotents(p, n, start, stop):
    """Codes in ``[start, stop)`` whose matrix satisfies ``E @ E == E``."""
    out = []
    for lo in range(start, stop, CHUNK):
        codes = np.arange(lo, min(lo + CHUNK, stop), dtype=np.int64)
        e = _decode(codes, p, n)
        sq = np.matmul(e, e) % p
        hit = np.all((sq == e).reshape(len(codes), -1), axis=1)
        out.extend(int(c) for c in codes[hit])
    return out


def first_nilpotent_difference(a, codes, p, n):
    """Index of the first code ``E`` with ``(A - E)**n == 0``, or -1."""
    av = np.asarray(a, dtype=np.int64).reshape(n, n)
    for lo in range(0, len(codes), CHUNK):
        batch = np.asarray(codes[lo:lo + CHUNK], dtype=np.int64)
        nm = (av[None, :, :] - _decode(batch, p, n)) % p
        pw = nm.copy()
        for _ in range(n - 1):
            pw = np.matmul(pw, nm) % p
        hit = np.flatnonzero(~pw.reshape(len(batch), -1).any(axis=1))
        if hit.size:
            return lo + int(hit[0])
    return -1
