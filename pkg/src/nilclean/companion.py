"""Companion matrices and the two completion constructions built on them.

* :func:`complete_with_charpoly` fills the first row of a companion-shaped
  matrix so that it acquires any prescribed monic characteristic polynomial.
* :func:`nil_clean_decompose_with_target` splits a companion matrix as an
  idempotent of prescribed rank plus a matrix of prescribed characteristic
  polynomial (up to the forced ``X^(n-1)`` coefficient).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import BadRank, DegreeMismatch, DegreeTooHigh, NotMonic
from .fields import FieldElem, FieldSpec, from_integer
from .matrix import Mat
from .poly import Poly


@dataclass(frozen=True)
class CompanionSpec:
    """Coefficients ``(c_0, ..., c_{n-1})`` of ``X^n + c_{n-1} X^{n-1} + ... + c_0``."""

    spec: FieldSpec
    c: Tuple[FieldElem, ...]

    def __post_init__(self):
        if len(self.c) < 1:
            raise ValueError("companion matrices need n >= 1")
        object.__setattr__(self, "c", tuple(self.spec(x) for x in self.c))

    @classmethod
    def of(cls, spec: FieldSpec, coeffs: Sequence) -> "CompanionSpec":
        return cls(spec, tuple(spec(x) for x in coeffs))

    @classmethod
    def from_poly(cls, f: Poly) -> "CompanionSpec":
        if not f.is_monic():
            raise NotMonic(f"{f} is not monic")
        return cls(f.spec, f.coeffs[:-1])

    @property
    def n(self) -> int:
        return len(self.c)

    def poly(self) -> Poly:
        return Poly.from_monic_tail(self.spec, self.c)

    def matrix(self) -> Mat:
        return companion(self)


@dataclass(frozen=True)
class BorderedCompanion:
    """Companion shape with a free first row.

    First row ``(-alpha_{n-1}, ..., -alpha_0)``, ones on the subdiagonal and
    ``-c_1, ..., -c_{n-1}`` down the last column below the first row.
    """

    spec: FieldSpec
    alphas: Tuple[FieldElem, ...]
    c_tail: Tuple[FieldElem, ...]

    @property
    def n(self) -> int:
        return len(self.alphas)

    def matrix(self) -> Mat:
        n = self.n
        spec = self.spec
        z, o = spec.zero(), spec.one()
        rows = [[z] * n for _ in range(n)]
        rows[0] = [-self.alphas[n - 1 - j] for j in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = o
            rows[i][n - 1] = rows[i][n - 1] - self.c_tail[i - 1]
        return Mat._raw(spec, rows)


def companion(cs: CompanionSpec) -> Mat:
    n = cs.n
    spec = cs.spec
    z, o = spec.zero(), spec.one()
    rows = [[z] * n for _ in range(n)]
    for i in range(n):
        if i:
            rows[i][i - 1] = o
        rows[i][n - 1] = rows[i][n - 1] - cs.c[i]
    return Mat._raw(spec, rows)


def _solve_alphas(spec: FieldSpec, target: Sequence[FieldElem], c_tail: Sequence[FieldElem],
                  pinned_top: FieldElem = None) -> List[FieldElem]:
    """Back-substitute the triangular system for the first-row unknowns.

    ``target[j]`` is the wanted coefficient of ``X^j`` (``j < n``). The ``i``-th
    equation reads ``alpha_{n-i} + sum_{t=1}^{i-1} alpha_{n-i+t} c_{n-t}
    + c_{n-i} = f_{n-i}`` with ``c_0 = 0``. When ``pinned_top`` is given,
    ``alpha_{n-1}`` is fixed to it and the first equation is skipped.
    """
    n = len(target)
    z = spec.zero()
    c = [z] + list(c_tail)  # c[0] = 0 for uniformity
    alpha = [z] * n
    for i in range(1, n + 1):
        if i == 1 and pinned_top is not None:
            alpha[n - 1] = pinned_top
            continue
        acc = target[n - i] - c[n - i]
        for t in range(1, i):
            acc = acc - alpha[n - i + t] * c[n - t]
        alpha[n - i] = acc
    return alpha


def _check_ctail(spec: FieldSpec, n: int, c_tail) -> Tuple[FieldElem, ...]:
    c_tail = tuple(spec(x) for x in c_tail)
    if len(c_tail) != n - 1:
        raise DegreeMismatch(f"c_tail has length {len(c_tail)}, expected {n - 1}")
    return c_tail


def complete_with_charpoly(f: Poly, c_tail: Sequence) -> Tuple[Tuple[FieldElem, ...], Mat]:
    """First-row completion with ``charpoly(M) == f`` (unique solution).

    Returns the alphas ``(alpha_0, ..., alpha_{n-1})`` and the matrix ``M``.
    The minimal polynomial of ``M`` also equals ``f``, so ``M`` is similar to
    the companion matrix of ``f``.
    """
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    n = f.degree
    if n < 1:
        raise DegreeMismatch("target polynomial must have degree >= 1")
    spec = f.spec
    c_tail = _check_ctail(spec, n, c_tail)
    alphas = tuple(_solve_alphas(spec, f.padded(n)[:n], c_tail))
    return alphas, BorderedCompanion(spec, alphas, c_tail).matrix()


def complete_fixed_leading(alpha_top: FieldElem, target_low: Sequence, c_tail: Sequence):
    """Completion with ``alpha_{n-1}`` pinned to ``alpha_top``.

    The ``X^(n-1)`` coefficient is then forced to ``alpha_top + c_{n-1}``; the
    lower coefficients ``f_0 .. f_{n-2}`` come from ``target_low``. Returns
    ``(alphas, M, f)``.
    """
    spec = alpha_top.spec
    target_low = tuple(spec(x) for x in target_low)
    n = len(target_low) + 1
    c_tail = _check_ctail(spec, n, c_tail)
    top = alpha_top + (c_tail[-1] if n > 1 else spec.zero())
    f = Poly(spec, list(target_low) + [top, spec.one()])
    alphas = tuple(_solve_alphas(spec, list(target_low) + [top], c_tail, pinned_top=alpha_top))
    return alphas, BorderedCompanion(spec, alphas, c_tail).matrix(), f


def _peeled_alphas(spec: FieldSpec, f: Poly, k: int, c_bottom: Sequence[FieldElem]) -> List[FieldElem]:
    """Alphas ``(alpha_0, ..., alpha_{n-2})`` for ``M = C - E`` with ``charpoly(M) == f``.

    ``c_bottom`` holds ``c_k, ..., c_{n-1}`` (the only companion entries that
    survive in ``M``). For ``k >= 2`` the first column of ``X I - M`` gives
    ``charpoly(M) = (X + 1) q + alpha_0`` where ``q`` is the same kind of
    determinant one size smaller with rank ``k - 1``.
    """
    n = f.degree
    if k == 1:
        # every c_1..c_{n-1} sits in the bottom block; pin alpha_{n-1} = 1
        alphas, _, _ = complete_fixed_leading(spec.one(), f.padded(n)[: n - 1], c_bottom)
        return list(alphas[: n - 1])
    q, r = f.divrem(Poly(spec, [1, 1]))
    rest = _peeled_alphas(spec, q, k - 1, c_bottom)
    return [r.coeff(0)] + rest


def nil_clean_decompose_with_target(cs: CompanionSpec, k: int, g: Poly) -> Tuple[Mat, Mat]:
    """Split ``C = E + M`` with ``E`` idempotent of rank ``k`` and
    ``charpoly(M) = X^n + (k + c_{n-1}) X^(n-1) + g``.

    ``E = [[I_k, E12], [0, 0]]`` where ``E12`` is nonzero only in its last
    column and bottom row.
    """
    spec = cs.spec
    n = cs.n
    if not (1 <= k <= n - 1):
        raise BadRank(f"k={k} outside [1, {n - 1}]")
    g = Poly(spec, g.coeffs) if g.spec == spec else g
    if g.degree > n - 2:
        raise DegreeTooHigh(f"deg g = {g.degree} > n - 2 = {n - 2}")
    c = cs.c
    lead = from_integer(k, spec) + c[n - 1]
    f = Poly(spec, list(g.padded(n - 1)) + [lead, spec.one()])
    alpha = _peeled_alphas(spec, f, k, c[k:])

    z, o = spec.zero(), spec.one()
    rows = [[z] * n for _ in range(n)]
    for i in range(k):
        rows[i][i] = o
        rows[i][n - 1] = alpha[i] - c[i]
    # bottom row of E12: alpha_{n-2}, ..., alpha_k in columns k .. n-2
    for j in range(k, n - 1):
        rows[k - 1][j] = alpha[n - 2 - (j - k)]
    e = Mat._raw(spec, rows)
    return e, companion(cs) - e
