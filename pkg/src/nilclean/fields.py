"""Exact arithmetic over prime fields F_p and the rationals.

Elements are immutable and canonical: an F_p element stores an ``int`` in
``[0, p)``, a rational element stores a :class:`fractions.Fraction` (always in
lowest terms with a positive denominator).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import DivisionByZero, MixedFields, ParseError

PRIME_LIMIT = 2**31


def is_prime(p: int) -> bool:
    """Deterministic trial division; instant for ``p < 2**31``."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the prime field F_p (``p`` set) or the rationals (``p is None``)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not (2 <= self.p < PRIME_LIMIT):
                raise ValueError(f"prime modulus out of range: {self.p!r}")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, value: Union[int, Fraction, str, "FieldElem"]) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise MixedFields(f"{value.spec} element given to {self}")
            return value
        if isinstance(value, str):
            return parse_elem(value, self)
        if isinstance(value, Fraction):
            if self.p is None:
                return FieldElem(self, value)
            return self(value.numerator) / self(value.denominator)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self}")
        return from_integer(value, self)

    def zero(self) -> "FieldElem":
        return from_integer(0, self)

    def one(self) -> "FieldElem":
        return from_integer(1, self)

    def elements(self):
        """All elements of a prime field, in representative order."""
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return [FieldElem(self, v) for v in range(self.p)]

    def selector(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def __repr__(self):
        return f"FieldSpec({self.selector()})"


RATIONALS = FieldSpec.rationals()


class FieldElem:
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        # callers pass a canonical value; use from_integer / FieldSpec(...) otherwise
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if other.spec != self.spec:
            raise MixedFields(f"{self.spec} vs {other.spec}")

    def _make(self, v) -> "FieldElem":
        p = self.spec.p
        return FieldElem(self.spec, v % p if p is not None else v)

    def __add__(self, other):
        self._check(other)
        return self._make(self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return self._make(self.value - other.value)

    def __mul__(self, other):
        self._check(other)
        return self._make(self.value * other.value)

    def __neg__(self):
        return self._make(-self.value)

    def inv(self) -> "FieldElem":
        if not self.value:
            raise DivisionByZero(f"inverse of zero in {self.spec}")
        p = self.spec.p
        if p is None:
            return FieldElem(self.spec, 1 / self.value)
        return FieldElem(self.spec, pow(self.value, -1, p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        p = self.spec.p
        if p is None:
            return FieldElem(self.spec, self.value**k)
        return FieldElem(self.spec, pow(self.value, k, p))

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __bool__(self):
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"{format_elem(self)} in {self.spec}"


# -- free-function surface -------------------------------------------------


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inv()


def from_integer(k: int, spec: FieldSpec) -> FieldElem:
    """The image ``k * 1`` of an integer in ``spec``."""
    if spec.p is None:
        return FieldElem(spec, Fraction(k))
    return FieldElem(spec, k % spec.p)


def characteristic(spec: FieldSpec) -> int:
    return spec.characteristic


def trace_index(e: FieldElem) -> Optional[int]:
    """Smallest admissible integer ``k`` with ``k * 1 == e``.

    Over F_p the answer lies in ``{1, ..., p}`` (``0`` maps to ``p``). Over the
    rationals ``e`` itself is returned when it is a nonnegative integer and
    ``None`` otherwise.
    """
    p = e.spec.p
    if p is not None:
        return e.value if e.value else p
    v = e.value
    if v.denominator == 1 and v.numerator >= 0:
        return int(v.numerator)
    return None


# -- text syntax ----------------------------------------------------------


def parse_field(text: str) -> FieldSpec:
    """Parse a field selector: ``q`` for the rationals, ``fp:<p>`` for F_p."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return RATIONALS
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise ParseError(f"bad prime in field selector {text!r}") from None
        try:
            return FieldSpec.prime(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field selector {text!r} (use 'q' or 'fp:<p>')")


def parse_elem(text, spec: FieldSpec) -> FieldElem:
    """Parse a decimal integer, or ``a/b`` over the rationals; ints pass through."""
    if isinstance(text, bool):
        raise ParseError(f"bad field element {text!r}")
    if isinstance(text, int):
        return from_integer(text, spec)
    if not isinstance(text, str):
        raise ParseError(f"bad field element {text!r}")
    t = text.strip()
    try:
        if "/" in t:
            if spec.p is not None:
                raise ParseError(f"fractions are not accepted over {spec}: {text!r}")
            num, den = t.split("/")
            value = Fraction(int(num), int(den))
            return FieldElem(spec, value)
        return from_integer(int(t), spec)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad field element {text!r}") from None


def format_elem(e: FieldElem) -> str:
    if e.spec.p is not None:
        return str(e.value)
    v = e.value
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def to_json_value(e: FieldElem):
    """JSON rendering: integers for F_p, strings for the rationals."""
    return e.value if e.spec.p is not None else format_elem(e)
