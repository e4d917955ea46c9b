"""Exhaustive ground truth over small prime fields.

Nothing here knows about companion matrices: the oracle scans all of
``M_n(F_p)`` for idempotents and then looks for one whose difference with the
query matrix is nilpotent.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import kernels
from .errors import BudgetExceeded, WrongField
from .fields import FieldSpec
from .matrix import Mat, charpoly, is_idempotent
from .poly import Poly

log = logging.getLogger(__name__)

FULL_SCAN = "FullScan"
PRECOMPUTED = "Precomputed"

DEFAULT_MAX_CANDIDATES = 2**25

_CACHE: Dict[Tuple[int, int], Tuple[int, ...]] = {}


@dataclass(frozen=True)
class SearchBudget:
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    strategy: str = PRECOMPUTED
    jobs: int = 1

    def admit(self, p: int, n: int) -> int:
        space = p ** (n * n)
        if space > self.max_candidates:
            raise BudgetExceeded(
                f"M_{n}(F_{p}) has {space} matrices, budget is {self.max_candidates}"
            )
        return space


@dataclass
class OracleResult:
    found: bool
    E: Optional[Mat]
    N: Optional[Mat]
    candidates_checked: int
    idempotents_checked: int


def decode(code: int, p: int, n: int) -> List[int]:
    digits = []
    for _ in range(n * n):
        code, d = divmod(code, p)
        digits.append(d)
    return digits[::-1]


def encode(values: List[int], p: int) -> int:
    code = 0
    for v in values:
        code = code * p + v
    return code


def _mat_from_code(code: int, spec: FieldSpec, n: int) -> Mat:
    flat = decode(code, spec.p, n)
    return Mat(spec, [flat[i * n:(i + 1) * n] for i in range(n)])


def _scan(p: int, n: int, jobs: int) -> Tuple[int, ...]:
    total = p ** (n * n)
    if jobs <= 1 or total < 1 << 16:
        return tuple(kernels.scan_idempotents(p, n, 0, total))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = ex.map(kernels.scan_idempotents, [p] * jobs, [n] * jobs, bounds[:-1], bounds[1:])
        return tuple(c for part in parts for c in part)


def idempotent_codes(p: int, n: int, budget: SearchBudget = SearchBudget()) -> Tuple[int, ...]:
    """Encodings of all idempotents of ``M_n(F_p)`` in increasing order."""
    FieldSpec.prime(p)
    budget.admit(p, n)
    key = (p, n)
    if budget.strategy == PRECOMPUTED and key in _CACHE:
        return _CACHE[key]
    log.debug("scanning %d matrices of M_%d(F_%d) via %s kernel", p ** (n * n), n, p, kernels.BACKEND)
    codes = _scan(p, n, budget.jobs)
    if budget.strategy == PRECOMPUTED:
        _CACHE[key] = codes
    return codes


def idempotents(p: int, n: int, budget: SearchBudget = SearchBudget()) -> List[Mat]:
    """Every ``E`` with ``E @ E == E`` in ``M_n(F_p)``, ordered by encoding."""
    spec = FieldSpec.prime(p)
    return [_mat_from_code(c, spec, n) for c in idempotent_codes(p, n, budget)]


def clear_cache() -> None:
    _CACHE.clear()


def _first_witness(a: List[int], codes: Tuple[int, ...], p: int, n: int, jobs: int) -> int:
    if jobs <= 1 or len(codes) < 4096:
        return kernels.first_nilpotent_difference(a, codes, p, n)
    bounds = [len(codes) * i // jobs for i in range(jobs + 1)]
    chunks = [codes[lo:hi] for lo, hi in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        hits = list(ex.map(kernels.first_nilpotent_difference, [a] * jobs, chunks, [p] * jobs, [n] * jobs))
    for lo, h in zip(bounds, hits):
        if h >= 0:
            return lo + h
    return -1


def oracle_search(a: Mat, budget: SearchBudget = SearchBudget()) -> OracleResult:
    """Full record of a brute-force nil-clean search for ``a``."""
    spec = a.spec
    if spec.p is None:
        raise WrongField("the brute-force oracle needs a prime field")
    p, n = spec.p, a.n
    space = budget.admit(p, n)
    codes = idempotent_codes(p, n, budget)
    idx = _first_witness(a.to_ints(), codes, p, n, budget.jobs)
    if idx < 0:
        return OracleResult(False, None, None, space, len(codes))
    e = _mat_from_code(codes[idx], spec, n)
    nil = a - e
    # re-derive with the exact matrix routines; the kernel only proposed it
    if not (is_idempotent(e) and charpoly(nil) == Poly.monomial(spec, n)):
        raise RuntimeError(f"kernel {kernels.BACKEND} returned an invalid witness")
    return OracleResult(True, e, nil, space, idx + 1)


def brute_force_nil_clean(a: Mat, budget: SearchBudget = SearchBudget()) -> Optional[Tuple[Mat, Mat]]:
    """First ``(E, a - E)`` with ``E`` idempotent and ``a - E`` nilpotent, else ``None``.

    ``None`` is an exhaustive proof that ``a`` is not nil-clean.
    """
    res = oracle_search(a, budget)
    return (res.E, res.N) if res.found else None
