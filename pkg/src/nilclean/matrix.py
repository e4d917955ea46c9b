"""Dense square matrices over a field and the invariants used throughout.

The characteristic polynomial is computed with Berkowitz's division-free
recurrence, so the same code is exact over F_p and over the rationals.
"""

from __future__ import annotations

import json
from typing import Iterable, List, Sequence

from .errors import DimensionMismatch, MixedFields, ParseError
from .fields import FieldElem, FieldSpec, from_integer, parse_elem, parse_field, to_json_value
from .poly import Poly, lcm, power_of_linear


class Mat:
    """Immutable ``n x n`` matrix; ``rows[i][j]`` is the entry in row ``i``, column ``j``."""

    __slots__ = ("spec", "n", "rows")

    def __init__(self, spec: FieldSpec, rows: Iterable[Iterable]):
        rs = tuple(tuple(spec(x) for x in row) for row in rows)
        n = len(rs)
        if n < 1:
            raise DimensionMismatch("matrices must be at least 1x1")
        if any(len(r) != n for r in rs):
            raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def _raw(cls, spec: FieldSpec, rows) -> "Mat":
        # trusted constructor: rows already hold canonical elements of ``spec``
        m = object.__new__(cls)
        object.__setattr__(m, "spec", spec)
        object.__setattr__(m, "n", len(rows))
        object.__setattr__(m, "rows", tuple(tuple(r) for r in rows))
        return m

    @classmethod
    def identity(cls, n: int, spec: FieldSpec) -> "Mat":
        z, o = spec.zero(), spec.one()
        return cls._raw(spec, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, spec: FieldSpec) -> "Mat":
        z = spec.zero()
        return cls._raw(spec, [[z] * n for _ in range(n)])

    @classmethod
    def diag(cls, spec: FieldSpec, values: Sequence) -> "Mat":
        n = len(values)
        z = spec.zero()
        return cls._raw(spec, [[spec(values[i]) if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> List[FieldElem]:
        return [r[j] for r in self.rows]

    def _check(self, other: "Mat") -> None:
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"{self.spec} vs {other.spec}")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        return Mat._raw(self.spec, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        return Mat._raw(self.spec, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat":
        return Mat._raw(self.spec, [[-a for a in r] for r in self.rows])

    def __mul__(self, other: "Mat") -> "Mat":
        self._check(other)
        cols = list(zip(*other.rows))
        z = self.spec.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a.value and b.value:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat._raw(self.spec, out)

    def scale(self, a: FieldElem) -> "Mat":
        return Mat._raw(self.spec, [[x * a for x in r] for r in self.rows])

    def matvec(self, v: Sequence[FieldElem]) -> List[FieldElem]:
        z = self.spec.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                if a.value and b.value:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __pow__(self, k: int) -> "Mat":
        return mat_pow(self, k)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def trace(self) -> FieldElem:
        acc = self.spec.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "Mat":
        return Mat._raw(self.spec, list(zip(*self.rows)))

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.spec == other.spec and self.rows == other.rows

    def __hash__(self):
        return hash((self.spec, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat[{self.spec}]([{body}])"

    def to_ints(self) -> List[int]:
        """Row-major canonical representatives (prime fields only)."""
        if self.spec.p is None:
            raise TypeError("integer encoding requires a prime field")
        return [x.value for r in self.rows for x in r]


def identity(n: int, spec: FieldSpec) -> Mat:
    return Mat.identity(n, spec)


def zero(n: int, spec: FieldSpec) -> Mat:
    return Mat.zero(n, spec)


def mat_pow(a: Mat, k: int) -> Mat:
    """``a**k`` by repeated squaring; ``a**0`` is the identity."""
    if k < 0:
        raise ValueError("negative matrix power")
    result = Mat.identity(a.n, a.spec)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def trace(a: Mat) -> FieldElem:
    return a.trace()


def block_diag(a: Mat, b: Mat) -> Mat:
    if a.spec != b.spec:
        raise MixedFields(f"{a.spec} vs {b.spec}")
    z = a.spec.zero()
    rows = [list(r) + [z] * b.n for r in a.rows]
    rows += [[z] * a.n + list(r) for r in b.rows]
    return Mat._raw(a.spec, rows)


def charpoly(a: Mat) -> Poly:
    """``det(X I - a)`` by Berkowitz's recurrence (no divisions).

    Working from the bottom-right corner outwards, the coefficient vector of
    the trailing principal block of size ``r`` is a lower-triangular Toeplitz
    matrix times the vector of the block of size ``r - 1``; the Toeplitz
    column is ``1, -a_rr, -R C, -R A1 C, ..., -R A1^(r-2) C``.
    """
    spec = a.spec
    n = a.n
    z, one = spec.zero(), spec.one()
    rows = a.rows
    # coefficient vector high-to-low for the empty trailing block
    vec = [one]
    for s in range(n - 1, -1, -1):
        size = n - s  # current block occupies indices s..n-1
        a_ss = rows[s][s]
        row = [rows[s][j] for j in range(s + 1, n)]
        col = [rows[i][s] for i in range(s + 1, n)]
        toeplitz = [one, -a_ss]
        w = col
        for _ in range(size - 1):
            acc = z
            for x, y in zip(row, w):
                if x.value and y.value:
                    acc = acc + x * y
            toeplitz.append(-acc)
            w = [
                _dot(rows[i], w, s + 1, z)
                for i in range(s + 1, n)
            ]
        # (size + 1) x size Toeplitz times vec (length size)
        new = []
        for i in range(size + 1):
            acc = z
            for j in range(min(i, size - 1) + 1):
                t = toeplitz[i - j]
                v = vec[j]
                if t.value and v.value:
                    acc = acc + t * v
            new.append(acc)
        vec = new
    return Poly(spec, reversed(vec))


def _dot(row, w, offset, z):
    acc = z
    for j, y in enumerate(w):
        x = row[offset + j]
        if x.value and y.value:
            acc = acc + x * y
    return acc


def _krylov_dependence(a: Mat, v: List[FieldElem]) -> Poly:
    """Monic polynomial of least degree with ``p(a) v = 0``.

    The Krylov vectors ``v, a v, a^2 v, ...`` are reduced against an echelon
    basis while tracking each vector's expression as a polynomial in ``a``;
    the first vector that reduces to zero yields the dependence.
    """
    spec = a.spec
    n = a.n
    z = spec.zero()
    basis = []  # list of (pivot index, reduced vector with pivot 1, combination Poly)
    current = list(v)
    k = 0
    while True:
        vec = list(current)
        comb = Poly.monomial(spec, k)
        for piv, bvec, bcomb in basis:
            c = vec[piv]
            if c.value:
                vec = [x - c * y for x, y in zip(vec, bvec)]
                comb = comb - bcomb.scale(c)
        piv = next((i for i in range(n) if vec[i].value), None)
        if piv is None:
            return comb.monic()
        inv = vec[piv].inv()
        basis.append((piv, [x * inv for x in vec], comb.scale(inv)))
        current = a.matvec(current)
        k += 1


def minpoly(a: Mat) -> Poly:
    """Least common multiple of the Krylov dependences of the standard basis vectors."""
    spec = a.spec
    z, o = spec.zero(), spec.one()
    result = Poly.one(spec)
    for i in range(a.n):
        e = [o if j == i else z for j in range(a.n)]
        result = lcm(result, _krylov_dependence(a, e))
        if result.degree == a.n:
            break  # already the characteristic polynomial
    return result


def rank(a: Mat) -> int:
    rows = [list(r) for r in a.rows]
    n = a.n
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c].value), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(n):
            if i != r and rows[i][c].value:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        r += 1
        if r == n:
            break
    return r


def evaluate_poly_at(p: Poly, a: Mat) -> Mat:
    """Horner evaluation of a polynomial at a matrix."""
    result = Mat.zero(a.n, a.spec)
    ident = Mat.identity(a.n, a.spec)
    for c in reversed(p.coeffs):
        result = result * a + ident.scale(c)
    return result


def is_idempotent(e: Mat) -> bool:
    return e * e == e


def is_nilpotent(a: Mat) -> bool:
    return charpoly(a) == Poly.monomial(a.spec, a.n)


def is_unipotent(a: Mat) -> bool:
    return charpoly(a) == power_of_linear(a.spec.one(), a.n)


# -- JSON ----------------------------------------------------------------


def mat_to_rows(a: Mat) -> list:
    return [[to_json_value(x) for x in r] for r in a.rows]


def mat_to_json(a: Mat) -> dict:
    return {"field": a.spec.selector(), "n": a.n, "rows": mat_to_rows(a)}


def rows_from_json(rows, spec: FieldSpec) -> Mat:
    try:
        return Mat(spec, [[parse_elem(x, spec) for x in r] for r in rows])
    except (TypeError, DimensionMismatch) as exc:
        raise ParseError(f"bad matrix rows: {exc}") from None


def mat_from_json(doc, spec: FieldSpec = None) -> Mat:
    """Accept a dict or a JSON string in the ``{"field", "n", "rows"}`` format."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"matrix is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ParseError("matrix JSON needs a 'rows' member")
    if "field" in doc:
        declared = parse_field(doc["field"])
        if spec is not None and declared != spec:
            raise ParseError(f"matrix declares {declared}, expected {spec}")
        spec = declared
    if spec is None:
        raise ParseError("matrix JSON needs a 'field' member")
    m = rows_from_json(doc["rows"], spec)
    if "n" in doc and doc["n"] != m.n:
        raise ParseError(f"declared n={doc['n']} but rows give {m.n}")
    return m


__all__ = [
    "Mat",
    "identity",
    "zero",
    "mat_pow",
    "trace",
    "block_diag",
    "charpoly",
    "minpoly",
    "rank",
    "evaluate_poly_at",
    "is_idempotent",
    "is_nilpotent",
    "is_unipotent",
    "mat_to_json",
    "mat_from_json",
    "from_integer",
]
