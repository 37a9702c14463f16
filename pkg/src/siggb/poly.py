"""Monomials, admissible monomial orders and sparse polynomials over GF(p).

A monomial is a plain tuple of non-negative exponents.  Every supported order
has a *linear* sort key (key(a*b) == key(a) + key(b) componentwise), so a term
carries its key alongside its exponents and comparisons are tuple comparisons.

Polynomials are immutable and canonical: terms strictly descending under the
ring's order, no zero coefficients.  Arithmetic merges sorted term sequences.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from operator import add, ge, le, sub
from typing import Callable, Iterable, Sequence

from .field import PrimeField

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**16 - 1
ORDER_KINDS = ("lex", "grlex", "grevlex")

# flipped by tests; validates every polynomial built by arithmetic
_DEBUG = os.environ.get("SIGGB_DEBUG") == "1"


class DimensionError(ValueError):
    pass


class ExponentOverflow(OverflowError):
    pass


def monomial(exps: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exps)
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
    return m


def mono_one(n: int) -> Monomial:
    return (0,) * n


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True iff ``b | a``."""
    return all(map(le, b, a))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """Return ``a / b``, or None when ``b`` does not divide ``a``."""
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch {len(a)} != {len(b)}")
    if all(map(ge, a, b)):
        return tuple(map(sub, a, b))
    return None


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch {len(a)} != {len(b)}")
    return tuple(map(max, a, b))


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m),) + m


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


_KEYS = {"lex": _lex_key, "grlex": _grlex_key, "grevlex": _grevlex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """An admissible order on monomials in ``n`` variables.

    ``key`` maps a monomial to a tuple whose natural order is the monomial
    order; variable 0 is the largest variable.
    """

    kind: str
    n: int
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in _KEYS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.n < 1:
            raise ValueError("need at least one variable")
        object.__setattr__(self, "key", _KEYS[self.kind])

    @property
    def graded(self) -> bool:
        return self.kind != "lex"

    def cmp(self, a: Monomial, b: Monomial) -> int:
        if len(a) != self.n or len(b) != self.n:
            raise DimensionError(
                f"monomials of length {len(a)}, {len(b)} in a {self.n}-variable order")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def mono_cmp(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return order.cmp(a, b)


@dataclass(frozen=True)
class PolyRing:
    field: PrimeField
    order: MonomialOrder
    names: tuple = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names",
                               tuple(f"x{i + 1}" for i in range(self.order.n)))
        if len(self.names) != self.order.n:
            raise DimensionError("variable names do not match order dimension")

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def p(self) -> int:
        return self.field.p

    def with_order(self, kind: str) -> PolyRing:
        return PolyRing(self.field, MonomialOrder(kind, self.n), self.names)

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.term(1, mono_one(self.n))

    def gen(self, i: int) -> Polynomial:
        return self.term(1, tuple(int(j == i) for j in range(self.n)))

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.n)]

    def term(self, coeff: int, mono: Monomial) -> Polynomial:
        c = coeff % self.p
        if not c:
            return self.zero()
        mono = monomial(mono)
        if len(mono) != self.n:
            raise DimensionError(f"monomial {mono} in a {self.n}-variable ring")
        return Polynomial(self, ((self.order.key(mono), mono, c),))

    def from_terms(self, terms: Iterable[tuple[Monomial, int]]) -> Polynomial:
        """Build a polynomial from (monomial, coefficient) pairs in any order."""
        acc: dict = {}
        for mono, c in terms:
            mono = monomial(mono)
            if len(mono) != self.n:
                raise DimensionError(f"monomial {mono} in a {self.n}-variable ring")
            acc[mono] = (acc.get(mono, 0) + c) % self.p
        key = self.order.key
        items = sorted(((key(m), m, c) for m, c in acc.items() if c), reverse=True)
        return Polynomial(self, tuple(items))

    def convert(self, f: Polynomial) -> Polynomial:
        """Re-sort ``f`` (from a ring over the same variables) under this ring's order."""
        return self.from_terms(f.terms)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial; ``_terms`` holds (key, monomial, coeff) descending."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self._terms = terms
        if _DEBUG:
            self.validate()

    @property
    def terms(self) -> tuple:
        return tuple((m, c) for _, m, c in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def lm(self) -> Monomial:
        return self._terms[0][1]

    @property
    def lc(self) -> int:
        return self._terms[0][2]

    @property
    def lead_key(self) -> tuple:
        return self._terms[0][0]

    def lt(self) -> tuple[Monomial, int]:
        return self._terms[0][1], self._terms[0][2]

    @property
    def degree(self) -> int:
        return max((sum(m) for _, m, _ in self._terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring.p == other.ring.p and self.ring.order == other.ring.order
                and self._terms == other._terms)

    def __hash__(self):
        return hash(tuple((m, c) for _, m, c in self._terms))

    def validate(self) -> None:
        p, n, key = self.ring.p, self.ring.n, self.ring.order.key
        prev = None
        for k, m, c in self._terms:
            if len(m) != n or any(e < 0 for e in m):
                raise AssertionError(f"bad monomial {m}")
            if not 0 < c < p:
                raise AssertionError(f"coefficient {c} not in [1, {p})")
            if k != key(m):
                raise AssertionError(f"stale key for {m}")
            if prev is not None and not k < prev:
                raise AssertionError("terms not strictly descending")
            prev = k

    def tail(self) -> Polynomial:
        return Polynomial(self.ring, self._terms[1:])

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial(self.ring, tuple((k, m, a * c % p) for k, m, a in self._terms))

    def monic(self) -> Polynomial:
        if not self._terms or self.lc == 1:
            return self
        return self.scale(pow(self.lc, -1, self.ring.p))

    def mul_term(self, c: int, t: Monomial) -> Polynomial:
        """Return ``c * t * self``; order compatibility keeps the terms sorted."""
        p = self.ring.p
        c %= p
        if not c or not self._terms:
            return self.ring.zero()
        kt = self.ring.order.key(t)
        return Polynomial(self.ring, tuple(
            (tuple(map(add, k, kt)), tuple(map(add, m, t)), a * c % p)
            for k, m, a in self._terms))

    def addmul(self, c: int, t: Monomial, q: Polynomial) -> Polynomial:
        """Return ``self + c*t*q`` by merging the two sorted term sequences."""
        p = self.ring.p
        c %= p
        if not c or not q._terms:
            return self
        kt = self.ring.order.key(t)
        a_terms = self._terms
        b_terms = [(tuple(map(add, k, kt)), tuple(map(add, m, t)), b * c % p)
                   for k, m, b in q._terms]
        if not a_terms:
            return Polynomial(self.ring, tuple(b_terms))
        out = []
        append = out.append
        i = j = 0
        la, lb = len(a_terms), len(b_terms)
        ta = a_terms[0]
        tb = b_terms[0]
        while True:
            ka, kb = ta[0], tb[0]
            if ka > kb:
                append(ta)
                i += 1
                if i == la:
                    out.extend(b_terms[j:])
                    break
                ta = a_terms[i]
            elif kb > ka:
                append(tb)
                j += 1
                if j == lb:
                    out.extend(a_terms[i:])
                    break
                tb = b_terms[j]
            else:
                s = (ta[2] + tb[2]) % p
                if s:
                    append((ka, ta[1], s))
                i += 1
                j += 1
                if i == la:
                    out.extend(b_terms[j:])
                    break
                if j == lb:
                    out.extend(a_terms[i:])
                    break
                ta = a_terms[i]
                tb = b_terms[j]
        return Polynomial(self.ring, tuple(out))

    def __add__(self, other: Polynomial) -> Polynomial:
        return self.addmul(1, mono_one(self.ring.n), other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self.addmul(-1, mono_one(self.ring.n), other)

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if len(self) < len(other):
            self, other = other, self
        acc = self.ring.zero()
        for _, m, c in other._terms:
            acc = acc.addmul(c, m, self)
        return acc

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        acc = self.ring.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __str__(self):
        if not self._terms:
            return "0"
        fmt = self.ring.format_monomial
        parts = []
        for _, m, c in self._terms:
            if not any(m):
                parts.append(str(c))
            elif c == 1:
                parts.append(fmt(m))
            else:
                parts.append(f"{c}*{fmt(m)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_addmul(p: Polynomial, c: int, t: Monomial, q: Polynomial) -> Polynomial:
    return p.addmul(c, t, q)


def _reduce_full(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``divisors`` (all terms, not just the lead)."""
    ring = f.ring
    p = ring.p
    rem = []
    while f:
        k, m, c = f._terms[0]
        for g in divisors:
            q = mono_div(m, g.lm)
            if q is not None:
                f = f.addmul(-c * pow(g.lc, -1, p), q, g)
                break
        else:
            rem.append((k, m, c))
            f = f.tail()
    return Polynomial(ring, tuple(rem))


def interreduce(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Monic, pairwise fully reduced generators of the same ideal, ascending by lm.

    Inputs are processed by ascending leading monomial; among equal leading
    monomials the first occurrence is kept and the later ones are reduced.
    Returns ``[]`` for the zero ideal.
    """
    nonzero = [f.monic() for f in polys if f]
    nonzero.sort(key=lambda f: f.lead_key)
    kept: list[Polynomial] = []
    for f in nonzero:
        r = _reduce_full(f, kept)
        if r:
            kept.append(r.monic())
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            g = kept[i]
            if g is None:
                continue
            others = [h for j, h in enumerate(kept) if j != i and h is not None]
            r = _reduce_full(g, others)
            if r != g:
                changed = True
                kept[i] = r.monic() if r else None
        kept = [g for g in kept if g is not None]
    kept.sort(key=lambda f: f.lead_key)
    return kept
