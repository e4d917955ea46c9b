import random

import pytest
from hypothesis import strategies as st

from nilclean import RATIONALS, FieldSpec, Mat
from nilclean.fields import FieldElem
from fractions import Fraction

F2, F3, F5 = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)
Q = RATIONALS
TEST_FIELDS = [F2, F3, F5, Q]
FIELD_IDS = ["F2", "F3", "F5", "Q"]

ACCEPTANCE_LINES = []


def random_elem(rng: random.Random, spec: FieldSpec) -> FieldElem:
    if spec.p is not None:
        return spec(rng.randrange(spec.p))
    num = rng.randint(-9, 9)
    den = rng.choice([1, 1, 1, 2, 3, 5])
    return spec(Fraction(num, den))


def random_matrix(rng: random.Random, spec: FieldSpec, n: int) -> Mat:
    return Mat(spec, [[random_elem(rng, spec) for _ in range(n)] for _ in range(n)])


def elems(spec: FieldSpec):
    """Hypothesis strategy for elements of ``spec``."""
    if spec.p is not None:
        return st.integers(0, spec.p - 1).map(spec)
    return st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6).map(spec)


@pytest.fixture
def rng():
    return random.Random(20241014)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
