"""Sig-polynomials ``(u, p)`` with ``u . f = p``, their leading pairs, and top-reduction.

Fast mode keeps only the signature ``lm(u)`` next to ``p``; verification mode
also carries the full module vector ``u`` so the identity ``u . f = p`` can be
checked after every step.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import add, ge, sub
from typing import Callable, Iterable, NamedTuple, Sequence

from .poly import Monomial, MonomialOrder, Polynomial, PolyRing, mono_divides, mono_mul
from .sigmodule import ModuleOrder, Signature, sig_divides


@dataclass(eq=False)
class SigPoly:
    sig: Signature
    poly: Polynomial
    u: tuple | None = None  # d polynomials, verification mode only

    @property
    def is_syzygy(self) -> bool:
        return not self.poly

    @property
    def lead(self) -> Monomial | None:
        return self.poly.lm if self.poly else None

    def pair(self) -> LeadingPair:
        return lm_pair(self)

    def mul_term(self, t: Monomial) -> SigPoly:
        u = None if self.u is None else tuple(ui.mul_term(1, t) for ui in self.u)
        return SigPoly(self.sig.mul(t), self.poly.mul_term(1, t), u)

    def monic(self) -> SigPoly:
        if not self.poly or self.poly.lc == 1:
            return self
        inv = pow(self.poly.lc, -1, self.poly.ring.p)
        u = None if self.u is None else tuple(ui.scale(inv) for ui in self.u)
        return SigPoly(self.sig, self.poly.scale(inv), u)

    def __repr__(self):
        return f"SigPoly({self.sig}, {self.poly})"


class LeadingPair(NamedTuple):
    sig: Signature
    lead: Monomial | None  # None marks a syzygy


def lm_pair(sp: SigPoly) -> LeadingPair:
    if sp.sig is None:
        raise ValueError("the zero module element has no leading pair")
    return LeadingPair(sp.sig, sp.lead)


def _as_pair(x) -> LeadingPair:
    return x if isinstance(x, LeadingPair) else lm_pair(x)


def cmp_ms(a: LeadingPair, b: LeadingPair, mo: ModuleOrder) -> bool:
    """``a <_{m,s} b``: some lambda maps a's lead onto b's lead with lambda*a.sig < b.sig."""
    if a.lead is None or b.lead is None or not mono_divides(a.lead, b.lead):
        return False
    lam = tuple(map(sub, b.lead, a.lead))
    return mo.key(a.sig.mul(lam)) < mo.key(b.sig)


def cmp_sm(a: LeadingPair, b: LeadingPair, mo: ModuleOrder) -> bool:
    """``a <_{s,m} b``; a syzygy ``a`` is below ``b`` whenever its signature divides b's."""
    if not sig_divides(a.sig, b.sig):
        return False
    if a.lead is None:
        return True
    if b.lead is None:
        return False
    lam = tuple(map(sub, b.sig.mono, a.sig.mono))
    key = mo.base.key
    return key(mono_mul(lam, a.lead)) < key(b.lead)


def divides_super(a: LeadingPair, b: LeadingPair) -> bool:
    """``a |_super b``: one multiplier scales both signature and lead of a onto b."""
    if a.lead is None and b.lead is None:
        return sig_divides(a.sig, b.sig)
    if a.lead is None or b.lead is None:
        return False
    if not sig_divides(a.sig, b.sig):
        return False
    lam = tuple(map(sub, b.sig.mono, a.sig.mono))
    return mono_mul(lam, a.lead) == b.lead


def cmp_l(a: LeadingPair, b: LeadingPair, base: MonomialOrder) -> int | None:
    """Compare ``lead * other_sig_mono`` cross products; None across indices."""
    if a.lead is None or b.lead is None:
        raise ValueError("the l-order is not defined on syzygies")
    if a.sig.index != b.sig.index:
        return None
    ka = base.key(mono_mul(a.lead, b.sig.mono))
    kb = base.key(mono_mul(b.lead, a.sig.mono))
    return (ka > kb) - (ka < kb)


# -- module vectors (verification mode) -------------------------------------

def unit_vector(ring: PolyRing, d: int, index: int) -> tuple:
    z = ring.zero()
    return tuple(ring.one() if i == index - 1 else z for i in range(d))


def vec_addmul(u: tuple, c: int, t: Monomial, v: tuple) -> tuple:
    return tuple(ui.addmul(c, t, vi) for ui, vi in zip(u, v))


def vec_scale_poly(g: Polynomial, u: tuple) -> tuple:
    return tuple(g * ui for ui in u)


def vec_dot(u: Sequence[Polynomial], f: Sequence[Polynomial]) -> Polynomial:
    acc = f[0].ring.zero()
    for ui, fi in zip(u, f):
        acc = acc + ui * fi
    return acc


def vec_signature(u: Sequence[Polynomial], mo: ModuleOrder) -> Signature | None:
    """Leading module monomial of ``u``; None for the zero vector."""
    best = None
    for i, ui in enumerate(u):
        if ui:
            s = Signature(ui.lm, i + 1)
            if best is None or mo.key(s) > mo.key(best):
                best = s
    return best


# -- top-reduction ------------------------------------------------------------

def tm_reduce_step(target: SigPoly, reducers: Iterable[SigPoly],
                   mo: ModuleOrder) -> SigPoly | None:
    """One signature-safe reduction of the leading monomial, or None if irreducible.

    Among reducers whose lead divides the target's lead with a strictly
    smaller scaled signature, the one with the smallest scaled signature wins;
    ties go to the earliest reducer.
    """
    if not target.poly:
        raise ValueError("cannot tm-reduce a syzygy")
    lead = target.poly.lm
    tkey = mo.key(target.sig)
    skey = mo.key
    best = None
    best_key = None
    best_lam = None
    for r in reducers:
        rp = r.poly
        if not rp:
            continue
        rl = rp._terms[0][1]
        if not all(map(ge, lead, rl)):
            continue
        lam = tuple(map(sub, lead, rl))
        k = skey(Signature(tuple(map(add, r.sig.mono, lam)), r.sig.index))
        if k < tkey and (best_key is None or k < best_key):
            best, best_key, best_lam = r, k, lam
    if best is None:
        return None
    p = target.poly.ring.p
    c = -target.poly.lc * pow(best.poly.lc, -1, p)
    poly = target.poly.addmul(c, best_lam, best.poly)
    u = None
    if target.u is not None:
        u = vec_addmul(target.u, c, best_lam, best.u)
    return SigPoly(target.sig, poly, u)


def tm_reduce_full(target: SigPoly, reducers: Sequence[SigPoly], mo: ModuleOrder,
                   on_step: Callable[[SigPoly], None] | None = None) -> SigPoly:
    """Repeat :func:`tm_reduce_step` until irreducible or zero."""
    while target.poly:
        nxt = tm_reduce_step(target, reducers, mo)
        if nxt is None:
            break
        target = nxt
        if on_step is not None:
            on_step(target)
    return target


def is_ts_rewritable(target, basis: Iterable[SigPoly], mo: ModuleOrder) -> bool:
    """True iff some basis element's leading pair is ``<_{s,m}`` the target's."""
    t = _as_pair(target)
    if t.lead is None:
        raise ValueError("ts-rewriting applies to non-syzygies")
    smono, idx = t.sig
    key = mo.base.key
    tlead_key = key(t.lead)
    for b in basis:
        bs = b.sig
        if bs.index != idx or not mono_divides(bs.mono, smono):
            continue
        if not b.poly:
            return True
        lam = tuple(map(sub, smono, bs.mono))
        if key(tuple(map(add, lam, b.poly.lm))) < tlead_key:
            return True
    return False


def is_super_reducible(target, basis: Iterable[SigPoly]) -> bool:
    t = _as_pair(target)
    for b in basis:
        if b is target:
            continue
        if divides_super(lm_pair(b), t):
            return True
    return False


def format_signature(sig: Signature, ring: PolyRing) -> str:
    return f"{ring.format_monomial(sig.mono)}*e{sig.index}"


def format_lead(lead: Monomial | None, ring: PolyRing) -> str:
    return "0" if lead is None else ring.format_monomial(lead)
