"""Deciding nil-cleanness of companion matrices and producing certificates."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

from .companion import CompanionSpec, companion, nil_clean_decompose_with_target
from .errors import BudgetExceeded
from .fields import FieldSpec, parse_field, trace_index
from .matrix import Mat, charpoly, is_idempotent, mat_to_rows, rank, rows_from_json
from .poly import Poly, power_of_linear

NILPOTENT = "Nilpotent"
UNIPOTENT = "Unipotent"
PROPER = "NilCleanProper"
NOT_NIL_CLEAN = "NotNilClean"

TRACE_NOT_INTEGER = "TraceNotInteger"
K_OUT_OF_RANGE = "KOutOfRange"

CENSUS_BUDGET = 10**7


@dataclass(frozen=True)
class Classification:
    verdict: str
    clause: Optional[str] = None
    k: Optional[int] = None
    reason: Optional[str] = None

    @property
    def nil_clean(self) -> bool:
        return self.verdict != NOT_NIL_CLEAN

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "clause": self.clause, "k": self.k, "reason": self.reason}


@dataclass(frozen=True)
class Certificate:
    """A claimed decomposition ``C = E + N``; the checks are always recomputed."""

    C: Mat
    E: Mat
    N: Mat

    @property
    def k(self) -> int:
        return rank(self.E)

    @property
    def checks(self) -> dict:
        n = self.C.n
        try:
            sum_ok = self.E + self.N == self.C
        except Exception:
            sum_ok = False
        return {
            "sum_ok": sum_ok,
            "idempotent_ok": is_idempotent(self.E),
            "nilpotent_ok": charpoly(self.N) == Poly.monomial(self.N.spec, n),
        }

    def valid(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "field": self.C.spec.selector(),
            "n": self.C.n,
            "k": self.k,
            "C": mat_to_rows(self.C),
            "E": mat_to_rows(self.E),
            "N": mat_to_rows(self.N),
            "checks": self.checks,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Certificate":
        # stored "checks" are ignored on purpose
        spec = parse_field(doc["field"])
        return cls(rows_from_json(doc["C"], spec), rows_from_json(doc["E"], spec), rows_from_json(doc["N"], spec))


@dataclass
class TraceReport:
    trace: str
    n: int
    characteristic: int
    admissible: bool
    candidate_ranks: List[int] = field(default_factory=list)
    forced: Optional[str] = None  # "nilpotent" | "unipotent" | "either" | None

    def to_json(self) -> dict:
        return {
            "trace": self.trace,
            "n": self.n,
            "characteristic": self.characteristic,
            "admissible": self.admissible,
            "candidate_ranks": self.candidate_ranks,
            "forced": self.forced,
        }


def trace_conditions(a: Mat) -> TraceReport:
    """Necessary conditions on ``trace(a)`` for ``a`` to be nil-clean.

    Any idempotent summand ``E`` has ``trace(a) == rank(E) * 1``, so the
    admissible ranks are the ``r`` in ``[0, n]`` with ``r * 1 == trace(a)``.
    ``admissible=False`` proves ``a`` is not nil-clean. If the only admissible
    ranks are 0 and/or n, the idempotent must be 0 or I.
    """
    spec = a.spec
    n = a.n
    t = a.trace()
    k = trace_index(t)
    if k is None:
        ranks = []
    elif spec.p is None:
        ranks = [k] if k <= n else []
    else:
        ranks = [r for r in range(n + 1) if (r - k) % spec.p == 0]
    forced = None
    if ranks and set(ranks) <= {0, n}:
        forced = {frozenset([0]): "nilpotent", frozenset([n]): "unipotent"}.get(frozenset(ranks), "either")
    return TraceReport(str(t), n, spec.characteristic, bool(ranks), ranks, forced)


def classify(cs: CompanionSpec) -> Classification:
    """Nil-clean verdict for a companion matrix from its coefficients alone.

    Precedence: nilpotent, then unipotent, then the trace clause.
    """
    spec = cs.spec
    n = cs.n
    if all(x.is_zero() for x in cs.c):
        return Classification(NILPOTENT, "i")
    if cs.poly() == power_of_linear(spec.one(), n):
        return Classification(UNIPOTENT, "ii")
    k = trace_index(-cs.c[n - 1])
    if spec.p is None:
        if k is None:
            return Classification(NOT_NIL_CLEAN, reason=TRACE_NOT_INTEGER)
        if 0 < k < n:
            return Classification(PROPER, "iii", k)
        return Classification(NOT_NIL_CLEAN, k=k, reason=K_OUT_OF_RANGE)
    if k < n:
        return Classification(PROPER, "iv", k)
    return Classification(NOT_NIL_CLEAN, k=k, reason=K_OUT_OF_RANGE)


def decompose(cs: CompanionSpec, verdict: Classification = None) -> Optional[Certificate]:
    """A certified nil-clean decomposition of the companion matrix, or ``None``."""
    verdict = verdict or classify(cs)
    c = companion(cs)
    spec, n = cs.spec, cs.n
    if verdict.verdict == NILPOTENT:
        return Certificate(c, Mat.zero(n, spec), c)
    if verdict.verdict == UNIPOTENT:
        ident = Mat.identity(n, spec)
        return Certificate(c, ident, c - ident)
    if verdict.verdict == PROPER:
        e, m = nil_clean_decompose_with_target(cs, verdict.k, Poly.zero(spec))
        return Certificate(c, e, m)
    return None


@dataclass
class Census:
    p: int
    n: int
    total: int = 0
    nilpotent: int = 0
    unipotent: int = 0
    proper: int = 0
    not_nil_clean: int = 0
    certificates_valid: int = 0
    certificates_invalid: int = 0

    def merge(self, other: "Census") -> "Census":
        for name in ("total", "nilpotent", "unipotent", "proper", "not_nil_clean",
                     "certificates_valid", "certificates_invalid"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self

    @property
    def nil_clean(self) -> int:
        return self.nilpotent + self.unipotent + self.proper

    @property
    def all_nil_clean(self) -> bool:
        return self.not_nil_clean == 0 and self.certificates_invalid == 0

    @property
    def size_rule_prediction(self) -> Optional[bool]:
        """``p < n`` for ``n >= 3``; no prediction for smaller ``n``."""
        return self.p < self.n if self.n >= 3 else None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "total": self.total,
            "nilpotent": self.nilpotent,
            "unipotent": self.unipotent,
            "proper": self.proper,
            "not_nil_clean": self.not_nil_clean,
            "nil_clean": self.nil_clean,
            "certificates_valid": self.certificates_valid,
            "certificates_invalid": self.certificates_invalid,
            "all_nil_clean": self.all_nil_clean,
            "size_rule_prediction": self.size_rule_prediction,
        }


_COUNTER = {NILPOTENT: "nilpotent", UNIPOTENT: "unipotent", PROPER: "proper", NOT_NIL_CLEAN: "not_nil_clean"}


def _census_range(p: int, n: int, start: int, stop: int) -> Census:
    spec = FieldSpec.prime(p)
    out = Census(p, n)
    for code in range(start, stop):
        # c_0 is the most significant digit, matching itertools.product order
        digits = []
        x = code
        for _ in range(n):
            x, d = divmod(x, p)
            digits.append(d)
        cs = CompanionSpec.of(spec, digits[::-1])
        v = classify(cs)
        out.total += 1
        setattr(out, _COUNTER[v.verdict], getattr(out, _COUNTER[v.verdict]) + 1)
        if v.nil_clean:
            if decompose(cs, v).valid():
                out.certificates_valid += 1
            else:
                out.certificates_invalid += 1
    return out


def iter_companions(spec: FieldSpec, n: int):
    """All companion specs of size ``n`` over a prime field, ``c_0`` varying slowest."""
    for c in itertools.product(range(spec.p), repeat=n):
        yield CompanionSpec.of(spec, c)


def enumerate_companions(p: int, n: int, budget: int = CENSUS_BUDGET, jobs: int = 1) -> Census:
    """Classify every companion matrix in ``M_n(F_p)`` and validate each certificate."""
    FieldSpec.prime(p)
    total = p**n
    if total > budget:
        raise BudgetExceeded(f"{p}^{n} = {total} tuples exceeds budget {budget}")
    if jobs <= 1 or total < 2 * jobs:
        return _census_range(p, n, 0, total)
    bounds = [total * i // jobs for i in range(jobs + 1)]
    result = Census(p, n)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(_census_range, p, n, a, b) for a, b in zip(bounds, bounds[1:])]
        for f in futures:
            result.merge(f.result())
    return result


def k_in_proper_range(v: Classification, spec: FieldSpec, n: int) -> bool:
    if v.verdict != PROPER:
        return True
    if spec.p is None:
        return 0 < v.k < n
    return 1 <= v.k <= spec.p and v.k < n
