"""Arithmetic in GF(p) for a word-sized odd prime p.

Polynomials keep their coefficients as plain ``int`` residues for speed; the
:class:`PrimeField` context performs the modular arithmetic.  The
:class:`FieldElement` wrapper is the checked, user-facing value type.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

MAX_CHARACTERISTIC = 2**31


class FieldError(ValueError):
    """Raised when elements of different fields are mixed or a field is invalid."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not 2 < self.p < MAX_CHARACTERISTIC:
            raise FieldError(f"characteristic {self.p} outside (2, 2^31)")
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise FieldError(f"residue {self.value} not reduced mod {self.field.p}")

    def _check(self, other: FieldElement) -> None:
        if self.field.p != other.field.p:
            raise FieldError(
                f"mixed characteristics {self.field.p} and {other.field.p}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field.neg(self.value), self.field)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
