import itertools

import pytest

from nilclean import _pykernels, kernels
from nilclean.companion import CompanionSpec, companion
from nilclean.errors import BudgetExceeded, WrongField
from nilclean.fields import FieldSpec
from nilclean.matrix import Mat, block_diag, charpoly, is_idempotent, rank
from nilclean.oracle import (
    FULL_SCAN,
    SearchBudget,
    brute_force_nil_clean,
    clear_cache,
    decode,
    encode,
    idempotent_codes,
    idempotents,
    oracle_search,
)
from nilclean.poly import Poly

from conftest import F2, F3, F5, Q

try:
    from nilclean import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def gl_order(q, n):
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def count_idempotents_by_subspaces(q, n):
    # an idempotent is a pair (image, kernel) of complementary subspaces
    return sum(gl_order(q, n) // (gl_order(q, r) * gl_order(q, n - r)) for r in range(n + 1))


def test_small_examples():
    assert idempotents(2, 1) == [Mat(F2, [[0]]), Mat(F2, [[1]])]
    family = idempotents(3, 2)
    for c0 in range(3):
        assert Mat(F3, [[0, -c0], [0, 1]]) in family
    assert len(idempotents(3, 3)) == 236


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (2, 4)])
def test_counts_match_subspace_formula(p, n):
    assert len(idempotent_codes(p, n)) == count_idempotents_by_subspaces(p, n)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_full_scan_definition(p, n):
    spec = FieldSpec.prime(p)
    listed = set(idempotents(p, n))
    for flat in itertools.product(range(p), repeat=n * n):
        a = Mat(spec, [flat[i * n:(i + 1) * n] for i in range(n)])
        assert (a in listed) == is_idempotent(a)


def test_listed_idempotents_trace_rank():
    for e in idempotents(3, 3):
        assert is_idempotent(e)
        assert e.trace() == F3(rank(e))


def test_ordering_and_encoding():
    codes = idempotent_codes(3, 3)
    assert list(codes) == sorted(codes)
    m = Mat(F3, [[1, 2, 0], [0, 0, 1], [2, 2, 2]])
    assert decode(encode(m.to_ints(), 3), 3, 3) == m.to_ints()
    assert encode([1, 0, 0, 0], 2) == 8  # entry (0, 0) is the most significant digit


def test_final_remark_negatives():
    assert brute_force_nil_clean(Mat.diag(F3, [1, -1])) is None
    assert brute_force_nil_clean(companion(CompanionSpec.of(F3, [0, -1, 0]))) is None
    assert brute_force_nil_clean(Mat.diag(F3, [1, -1, 0])) is None


def test_witness_is_valid_and_first():
    a = companion(CompanionSpec.of(F3, [1, 1, -1]))
    e, nil = brute_force_nil_clean(a)
    assert is_idempotent(e) and e + nil == a and charpoly(nil) == Poly.monomial(F3, 3)
    # no idempotent with a smaller encoding works
    target = encode(e.to_ints(), 3)
    for code in idempotent_codes(3, 3):
        if code >= target:
            break
        cand = Mat(F3, [decode(code, 3, 3)[i * 3:(i + 1) * 3] for i in range(3)])
        assert charpoly(a - cand) != Poly.monomial(F3, 3)


def test_absence_is_exhaustive():
    a = Mat.diag(F3, [1, -1])
    for e in idempotents(3, 2):
        assert charpoly(a - e) != Poly.monomial(F3, 2)


def test_budget_and_field_errors():
    with pytest.raises(BudgetExceeded):
        idempotent_codes(3, 4)
    with pytest.raises(BudgetExceeded):
        brute_force_nil_clean(Mat.identity(3, F3), SearchBudget(max_candidates=1000))
    with pytest.raises(WrongField):
        brute_force_nil_clean(Mat.identity(2, Q))
    # default budget admits the (2, 5) scan without running it
    SearchBudget().admit(2, 5)


def test_strategies_agree():
    clear_cache()
    a = idempotent_codes(2, 3, SearchBudget(strategy=FULL_SCAN))
    b = idempotent_codes(2, 3)
    assert a == b


def test_parallel_scan_agrees():
    serial = idempotent_codes(2, 4, SearchBudget(strategy=FULL_SCAN))
    par = idempotent_codes(2, 4, SearchBudget(strategy=FULL_SCAN, jobs=2))
    assert serial == par
    a = companion(CompanionSpec.of(F2, [1, 0, 1, 1]))
    r1 = oracle_search(a)
    big = SearchBudget(jobs=2)
    r2 = oracle_search(a, big)
    assert r1.E == r2.E


@needs_compiled
@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 2), (2, 3), (5, 2), (3, 3), (2, 4)])
def test_backends_agree_on_scan(p, n):
    total = p ** (n * n)
    assert _ckernels.scan_idempotents(p, n, 0, total) == _pykernels.scan_idempotents(p, n, 0, total)
    mid = total // 3
    assert _ckernels.scan_idempotents(p, n, mid, total - 1) == _pykernels.scan_idempotents(p, n, mid, total - 1)


@needs_compiled
def test_backends_agree_on_witness(rng):
    codes = idempotent_codes(3, 3)
    for _ in range(60):
        a = [rng.randrange(3) for _ in range(9)]
        assert _ckernels.first_nilpotent_difference(a, codes, 3, 3) == _pykernels.first_nilpotent_difference(
            a, codes, 3, 3
        )


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
