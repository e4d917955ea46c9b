"""Dense univariate polynomials over a :class:`~nilclean.fields.FieldSpec`."""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence, Tuple

from .errors import DivisionByZero, MixedFields, ParseError
from .fields import FieldElem, FieldSpec, format_elem, parse_elem, to_json_value

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``X**i``.

    The coefficient tuple is always trimmed, so the zero polynomial has no
    coefficients at all and every other polynomial has a nonzero leading term.
    """

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable = ()):
        cs = [spec(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec)

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, [1])

    @classmethod
    def x(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, [0, 1])

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, coeff=1) -> "Poly":
        return cls(spec, [0] * degree + [coeff])

    @classmethod
    def from_monic_tail(cls, spec: FieldSpec, tail: Sequence) -> "Poly":
        """``X**n + tail[n-1] X**(n-1) + ... + tail[0]`` with ``n = len(tail)``."""
        return cls(spec, list(tail) + [1])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one()

    def lc(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else self.spec.zero()

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero()

    def padded(self, length: int) -> Tuple[FieldElem, ...]:
        """Coefficients low-to-high, zero-padded to ``length``."""
        z = self.spec.zero()
        return self.coeffs + (z,) * (length - len(self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        z = self.spec.zero()
        return Poly(self.spec, (a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=z)))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        z = self.spec.zero()
        return Poly(self.spec, (a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=z)))

    def __neg__(self) -> "Poly":
        return Poly(self.spec, (-a for a in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.spec)
        out = [self.spec.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.spec, out)

    def scale(self, a: FieldElem) -> "Poly":
        return Poly(self.spec, (c * a for c in self.coeffs))

    def __call__(self, a: FieldElem) -> FieldElem:
        return self.eval(a)

    def eval(self, a: FieldElem) -> FieldElem:
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def divrem(self, d: "Poly") -> Tuple["Poly", "Poly"]:
        """Euclidean division: ``self == d * q + r`` with ``deg r < deg d``."""
        self._check(d)
        if d.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        if len(rem) - 1 < dd:
            return Poly(self.spec), self
        lead_inv = d.coeffs[-1].inv()
        quot = [self.spec.zero()] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead_inv
            quot[i - dd] = c
            if c.is_zero():
                continue
            for j, b in enumerate(d.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - c * b
        return Poly(self.spec, quot), Poly(self.spec, rem[:dd])

    def __floordiv__(self, d: "Poly") -> "Poly":
        return self.divrem(d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return self.divrem(d)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise DivisionByZero("zero polynomial has no monic associate")
        return self.scale(self.coeffs[-1].inv())

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self)} over {self.spec})"

    def __str__(self):
        return format_poly(self)


# -- free-function surface -------------------------------------------------


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def sub(p: Poly, q: Poly) -> Poly:
    return p - q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(p: Poly, a: FieldElem) -> Poly:
    return p.scale(a)


def evaluate(p: Poly, a: FieldElem) -> FieldElem:
    return p.eval(a)


def degree(p: Poly):
    return p.degree


def is_monic(p: Poly) -> bool:
    return p.is_monic()


def divrem(f: Poly, d: Poly) -> Tuple[Poly, Poly]:
    return f.divrem(d)


def power_of_linear(a: FieldElem, n: int) -> Poly:
    """``(X - a)**n`` by ``n`` successive multiplications."""
    if n < 1:
        raise ValueError("exponent must be positive")
    spec = a.spec
    lin = Poly(spec, [-a, spec.one()])
    out = lin
    for _ in range(n - 1):
        out = out * lin
    return out


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (``gcd(0, 0) == 0``)."""
    p._check(q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        raise DivisionByZero("lcm with the zero polynomial")
    return ((p * q) // gcd(p, q)).monic()


# -- text / JSON ---------------------------------------------------------


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Comma-separated coefficients, low-to-high (``"2,0,0,1"`` is ``X^3 + 2``)."""
    t = text.strip()
    if not t:
        return Poly(spec)
    try:
        return Poly(spec, [parse_elem(tok, spec) for tok in t.split(",")])
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad polynomial {text!r}: {exc}") from None


def poly_to_json(p: Poly) -> list:
    return [to_json_value(c) for c in p.coeffs]


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        cs = format_elem(c)
        if i == 0:
            terms.append(cs)
        else:
            mono = "X" if i == 1 else f"X^{i}"
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(terms)
