import random

import pytest

from nilclean.companion import (
    BorderedCompanion,
    CompanionSpec,
    companion,
    complete_fixed_leading,
    complete_with_charpoly,
    nil_clean_decompose_with_target,
)
from nilclean.errors import BadRank, DegreeMismatch, DegreeTooHigh, NotMonic
from nilclean.fields import from_integer
from nilclean.matrix import Mat, charpoly, is_idempotent, is_nilpotent, minpoly, rank
from nilclean.poly import Poly

from conftest import F2, F3, F5, FIELD_IDS, Q, TEST_FIELDS, random_elem


def test_companion_layout():
    assert companion(CompanionSpec.of(F2, [0, 0])) == Mat(F2, [[0, 0], [1, 0]])
    c = companion(CompanionSpec.of(F3, [1, 0, 0]))
    assert c == Mat(F3, [[0, 0, 2], [1, 0, 0], [0, 1, 0]])
    assert charpoly(c) == Poly(F3, [1, 0, 0, 1])
    assert charpoly(companion(CompanionSpec.of(F3, [2, 1]))) == Poly(F3, [2, 1, 1])


def test_bordered_layout():
    m = BorderedCompanion(Q, tuple(Q(x) for x in (1, 2, 3)), (Q(5), Q(7))).matrix()
    assert m == Mat(Q, [[-3, -2, -1], [1, 0, -5], [0, 1, -7]])


def test_complete_zero_tail():
    f = Poly(F5, [4, 3, 2, 1])
    alphas, m = complete_with_charpoly(f, [0, 0])
    assert alphas == (F5(4), F5(3), F5(2))
    assert m.rows[0] == (F5(-2), F5(-3), F5(-4))


def test_complete_two_by_two_example():
    alphas, m = complete_with_charpoly(Poly.monomial(F3, 2), [F3(-1)])
    assert alphas == (F3(1), F3(1))
    assert m == Mat(F3, [[-1, -1], [1, 1]])
    assert charpoly(m) == Poly.monomial(F3, 2)


def test_complete_errors():
    with pytest.raises(NotMonic):
        complete_with_charpoly(Poly(F5, [1, 2]), [])
    with pytest.raises(DegreeMismatch):
        complete_with_charpoly(Poly(F5, [1, 2, 1]), [])


def test_fixed_leading_examples():
    alphas, m, f = complete_fixed_leading(F3(1), [0], [F3(-1)])
    assert f == Poly.monomial(F3, 2)
    assert m == Mat(F3, [[-1, -1], [1, 1]])

    alphas, m, f = complete_fixed_leading(F5(0), [0, 0, 0], [0, 0, 0])
    assert m == companion(CompanionSpec.of(F5, [0, 0, 0, 0]))
    assert all(a.is_zero() for a in alphas)

    alphas, m, f = complete_fixed_leading(F5(1), [0, 0], [F5(0), F5(-1)])
    assert f == Poly.monomial(F5, 3)
    assert alphas == (F5(1), F5(1), F5(1))
    assert charpoly(m) == Poly.monomial(F5, 3)


def _rand_instance(rng, spec):
    n = rng.randint(1, 8)
    f = Poly(spec, [random_elem(rng, spec) for _ in range(n)] + [1])
    tail = [random_elem(rng, spec) for _ in range(n - 1)]
    return f, tail


@pytest.mark.parametrize("spec", TEST_FIELDS, ids=FIELD_IDS)
def test_completion_hits_charpoly_and_minpoly(spec):
    rng = random.Random(11 + (spec.p or 0))
    for _ in range(120):
        f, tail = _rand_instance(rng, spec)
        alphas, m = complete_with_charpoly(f, tail)
        assert charpoly(m) == f
        assert minpoly(m) == f


@pytest.mark.parametrize("spec", TEST_FIELDS, ids=FIELD_IDS)
def test_completion_uniqueness(spec):
    rng = random.Random(5)
    for _ in range(40):
        f, tail = _rand_instance(rng, spec)
        alphas, _ = complete_with_charpoly(f, tail)
        j = rng.randrange(len(alphas))
        bump = spec(1) if spec.p is None else spec(rng.randrange(1, spec.p))
        perturbed = list(alphas)
        perturbed[j] = perturbed[j] + bump
        m2 = BorderedCompanion(spec, tuple(perturbed), tuple(spec(x) for x in tail)).matrix()
        assert charpoly(m2) != f


def _check_decomposition(cs, k, g):
    spec, n = cs.spec, cs.n
    e, m = nil_clean_decompose_with_target(cs, k, g)
    assert e + m == companion(cs)
    assert is_idempotent(e)
    assert rank(e) == k
    want = Poly(spec, list(g.padded(n - 1)) + [from_integer(k, spec) + cs.c[-1], 1])
    assert charpoly(m) == want
    z, o = spec.zero(), spec.one()
    for i in range(n):
        for j in range(n):
            x = e[i, j]
            if i >= k:
                assert x == z  # E21 and E22 vanish
            elif j < k:
                assert x == (o if i == j else z)  # E11 = I_k
            elif not (j == n - 1 or i == k - 1):
                assert x == z  # E12 lives in its last column and bottom row
    return e, m


@pytest.mark.parametrize("spec", TEST_FIELDS, ids=FIELD_IDS)
def test_decomposition_postconditions(spec):
    rng = random.Random(23 + (spec.p or 0))
    for _ in range(120):
        n = rng.randint(2, 8)
        cs = CompanionSpec(spec, tuple(random_elem(rng, spec) for _ in range(n)))
        k = rng.randint(1, n - 1)
        g = Poly(spec, [random_elem(rng, spec) for _ in range(rng.randint(0, n - 1))])
        _check_decomposition(cs, k, g)


def test_decomposition_two_by_two():
    for c0 in range(5):
        cs = CompanionSpec.of(F5, [c0, -1])
        e, m = _check_decomposition(cs, 1, Poly.zero(F5))
        assert is_nilpotent(m)


def test_decomposition_errors():
    cs = CompanionSpec.of(F5, [1, 2, 3])
    with pytest.raises(BadRank):
        nil_clean_decompose_with_target(cs, 0, Poly.zero(F5))
    with pytest.raises(BadRank):
        nil_clean_decompose_with_target(cs, 3, Poly.zero(F5))
    with pytest.raises(DegreeTooHigh):
        nil_clean_decompose_with_target(cs, 1, Poly(F5, [0, 0, 1]))


# Fourth-order decompositions over F_3 displayed in the worked example. The
# matrix printed under "c_3 = 1" has bottom-right entry 1 = -c_3, so it is the
# c_3 = -1 case (k = 1); the one printed under "c_3 = -1" is the c_3 = 1 case
# (k = 2). Each is paired with the coefficient it actually decomposes.


def n_c3_zero(c1, c2):
    return Mat(F3, [[-1, 0, 0, -1], [1, -1, 0, 1], [0, 1, -1, 0], [0, 0, 1, 0]])


def n_c3_minus_one(c1, c2):
    return Mat(F3, [[-1, c2 - 1, c1 - c2 - 1, -c1 - c2 * c2 - 1], [1, 0, 0, -c1], [0, 1, 0, -c2], [0, 0, 1, 1]])


def n_c3_one(c1, c2):
    return Mat(F3, [[-1, 0, 0, -1], [1, -1, c2, 1], [0, 1, 0, -c2], [0, 0, 1, -1]])


@pytest.mark.parametrize("c3,k,builder", [(0, 3, n_c3_zero), (-1, 1, n_c3_minus_one), (1, 2, n_c3_one)])
def test_order_four_example_reproduced(c3, k, builder):
    for c0 in range(3):
        for c1 in range(3):
            for c2 in range(3):
                cs = CompanionSpec.of(F3, [c0, c1, c2, c3])
                e, m = nil_clean_decompose_with_target(cs, k, Poly.zero(F3))
                assert m == builder(c1, c2)
                assert is_nilpotent(m) and is_idempotent(companion(cs) - m)


def test_order_four_label_mismatch_documented():
    # the literal pairing (matrix shown under "c_3 = 1" with c_3 = 1) is not a decomposition
    cs = CompanionSpec.of(F3, [0, 0, 0, 1])
    assert not is_idempotent(companion(cs) - n_c3_minus_one(0, 0))
