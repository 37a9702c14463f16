"""Classical Buchberger algorithm and Groebner basis checks.

This module is the ground truth the signature engines are compared against,
so it deliberately shares no arithmetic with them: polynomials are converted
to ``{monomial: coeff}`` dicts and reduced with a max-heap of pending terms.
Only the monomial order's sort key is borrowed from :mod:`siggb.poly`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .poly import Monomial, MonomialOrder, Polynomial, PolyRing


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class _Reducer:
    """A divisor prepared for reduction: lead, inverse lead coefficient, tail terms."""

    __slots__ = ("lm", "lc_inv", "tail", "poly")

    def __init__(self, poly: dict, order: MonomialOrder, p: int):
        lm = max(poly, key=order.key)
        self.lm = lm
        self.lc_inv = pow(poly[lm], -1, p)
        self.tail = [(m, c) for m, c in poly.items() if m != lm]
        self.poly = poly


def _nf(f: dict, divisors: Sequence[_Reducer], order: MonomialOrder, p: int) -> dict:
    key = order.key

    def hkey(m):
        return tuple(-x for x in key(m))

    work = dict(f)
    heap = [(hkey(m), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for g in divisors:
            if _divides(g.lm, m):
                q = tuple(x - y for x, y in zip(m, g.lm))
                factor = c * g.lc_inv % p
                for tm, tc in g.tail:
                    mm = tuple(x + y for x, y in zip(tm, q))
                    old = work.get(mm)
                    if old is None:
                        work[mm] = -factor * tc % p
                        heapq.heappush(heap, (hkey(mm), mm))
                    else:
                        v = (old - factor * tc) % p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            rem[m] = c
    return rem


def _monic(f: dict, order: MonomialOrder, p: int) -> dict:
    lm = max(f, key=order.key)
    inv = pow(f[lm], -1, p)
    return {m: c * inv % p for m, c in f.items()}


def _spoly(a: _Reducer, b: _Reducer, p: int) -> dict:
    m = _lcm(a.lm, b.lm)
    qa = tuple(x - y for x, y in zip(m, a.lm))
    qb = tuple(x - y for x, y in zip(m, b.lm))
    out: dict = {}
    for mono, c in a.tail:
        mm = tuple(x + y for x, y in zip(mono, qa))
        out[mm] = (out.get(mm, 0) + c * a.lc_inv) % p
    for mono, c in b.tail:
        mm = tuple(x + y for x, y in zip(mono, qb))
        out[mm] = (out.get(mm, 0) - c * b.lc_inv) % p
    return {m: c for m, c in out.items() if c}


def _to_dict(f: Polynomial) -> dict:
    return dict(f.terms)


def _to_poly(ring: PolyRing, d: dict) -> Polynomial:
    return ring.from_terms(d.items())


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of full multivariate division of ``f`` by ``G``."""
    ring = f.ring
    divisors = [_Reducer(_to_dict(g), ring.order, ring.p) for g in G if g]
    return _to_poly(ring, _nf(_to_dict(f), divisors, ring.order, ring.p))


def _reduce_dicts(G: list[dict], order: MonomialOrder, p: int) -> list[dict]:
    """Reduced basis from a Groebner basis given as dicts."""
    G = [_monic(g, order, p) for g in G if g]
    G.sort(key=lambda g: order.key(max(g, key=order.key)))
    minimal: list[dict] = []
    leads: list[Monomial] = []
    for g in G:
        lm = max(g, key=order.key)
        if any(_divides(l, lm) for l in leads):
            continue
        minimal.append(g)
        leads.append(lm)
    out = []
    for i, g in enumerate(minimal):
        others = [_Reducer(h, order, p) for j, h in enumerate(minimal) if j != i]
        lm = leads[i]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _nf(tail, others, order, p)
        r[lm] = 1
        out.append(r)
    return out


def reduce_basis(G: Sequence[Polynomial]) -> list[Polynomial]:
    """The reduced Groebner basis, ascending by leading monomial.

    ``G`` must already be a Groebner basis of its ideal.
    """
    G = [g for g in G if g]
    if not G:
        return []
    ring = G[0].ring
    out = [_to_poly(ring, d) for d in _reduce_dicts([_to_dict(g) for g in G], ring.order, ring.p)]
    return sorted(out, key=lambda f: f.lead_key)


def buchberger(F: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced Groebner basis of ``<F>`` by Buchberger's algorithm.

    Normal selection strategy (smallest lcm first) and the coprime-leads
    criterion only.
    """
    F = [f for f in F if f]
    if not F:
        return []
    ring = F[0].ring
    order, p = ring.order, ring.p
    key = order.key
    G: list[_Reducer] = []
    pairs: list = []
    counter = 0

    def add(h: dict):
        nonlocal counter
        r = _Reducer(_monic(h, order, p), order, p)
        for i, g in enumerate(G):
            if _coprime(g.lm, r.lm):
                continue
            m = _lcm(g.lm, r.lm)
            counter += 1
            heapq.heappush(pairs, (key(m), counter, i, len(G)))
        G.append(r)

    for f in F:
        r = _nf(_to_dict(f), G, order, p)
        if r:
            add(r)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s = _spoly(G[i], G[j], p)
        if not s:
            continue
        r = _nf(s, G, order, p)
        if r:
            add(r)
    reduced = _reduce_dicts([g.poly for g in G], order, p)
    return sorted((_to_poly(ring, d) for d in reduced), key=lambda f: f.lead_key)


@dataclass
class GBReport:
    is_gb: bool
    failing_spair: tuple | None = None  # (i, j, remainder)
    reduced_basis: list = field(default_factory=list)
    misplaced_pairs: list = field(default_factory=list)


def verify_gb(G: Sequence[Polynomial]) -> GBReport:
    """Check that every S-polynomial of ``G`` reduces to zero modulo ``G``."""
    G = [g for g in G if g]
    if not G:
        return GBReport(True)
    ring = G[0].ring
    order, p = ring.order, ring.p
    reducers = [_Reducer(_monic(_to_dict(g), order, p), order, p) for g in G]
    for j in range(len(reducers)):
        for i in range(j):
            a, b = reducers[i], reducers[j]
            if _coprime(a.lm, b.lm):
                continue
            r = _nf(_spoly(a, b, p), reducers, order, p)
            if r:
                return GBReport(False, (i, j, _to_poly(ring, r)))
    return GBReport(True, None, reduce_basis(G))


def same_ideal_basis(G: Sequence[Polynomial], H: Sequence[Polynomial]) -> bool:
    """Set equality of two reduced bases as monic polynomials."""
    return sorted(map(str, G)) == sorted(map(str, H))


def find_misplaced_pairs(basis, base: MonomialOrder) -> list[tuple[int, int]]:
    """Positions ``i < j`` in one index block with LM(sp_i) l-smaller than LM(sp_j)."""
    key = base.key
    out = []
    for j, b in enumerate(basis):
        if not b.poly:
            continue
        for i in range(j):
            a = basis[i]
            if not a.poly or a.sig.index != b.sig.index:
                continue
            # lead_i * mu_j < lead_j * mu_i
            left = tuple(x + y for x, y in zip(a.poly.lm, b.sig.mono))
            right = tuple(x + y for x, y in zip(b.poly.lm, a.sig.mono))
            if key(left) < key(right):
                out.append((i, j))
    return sorted(out)
