"""Signature-based Groebner basis engines: GVWHS, F5G, F5B and F5GEN.

All four share one main loop (pop the signature-minimal J-pair, test the
rewriting criteria, tm-reduce, insert, spawn J-pairs and principal syzygies).
They differ in three places:

* initialisation: GVWHS queues ``(e_i, f_i)``; the F5 family starts with the
  inputs already in the basis and queues their J-pairs;
* criteria: GVWHS asks whether the pair is ts-rewritable by syzygies plus
  basis; the F5 family asks ts-rewritable by the principal syzygies or
  F5-rewritable by the basis;
* where a new element goes in the basis, and which J-pair survives when two
  share a signature.

The basis of the F5 family is kept as contiguous per-index blocks in
ascending index order; the F5-rewritable test scans a block from its end.
"""
from __future__ import annotations

import heapq
import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Sequence

from .poly import Monomial, Polynomial, PolyRing, interreduce, mono_lcm, mono_one
from .sigmodule import (ConfigurationError, ModuleOrder, Signature, check_compatibility,
                        make_module_order, sig_divides)
from .sigpoly import (LeadingPair, SigPoly, cmp_l, format_lead, format_signature,
                      is_ts_rewritable, tm_reduce_full, unit_vector, vec_dot,
                      vec_scale_poly, vec_signature)

log = logging.getLogger(__name__)

VARIANTS = ("gvwhs", "f5g", "f5b", "f5gen")
INSERT_POLICIES = ("block-end", "after-first-component")
MODES = ("fast", "verify")

STAT_KEYS = ("jpairs_created", "jpairs_discarded_ts", "jpairs_discarded_f5",
             "reductions", "zero_reductions", "basis_size", "psyz_size",
             "loop_iterations", "reduction_steps")


class IncompatibleOrdersError(ConfigurationError):
    pass


@dataclass(eq=False)
class JPair:
    """``multiplier * first``, the signature-larger half of a critical pair."""

    sig: Signature
    multiplier: Monomial
    first: SigPoly
    second: SigPoly | None
    lead: Monomial
    gw_deg: int | None = None

    def first_pos(self, basis: Sequence[SigPoly]) -> int:
        return basis.index(self.first)

    def second_pos(self, basis: Sequence[SigPoly]) -> int | None:
        return None if self.second is None else basis.index(self.second)

    def pair(self) -> LeadingPair:
        return LeadingPair(self.sig, self.lead)


def make_jpair(a: SigPoly, b: SigPoly, mo: ModuleOrder) -> JPair | None:
    """J-pair of two non-syzygies, or None when both scaled signatures coincide."""
    if not a.poly or not b.poly:
        raise ValueError("J-pairs are formed from non-syzygies")
    la, lb = a.poly.lm, b.poly.lm
    m = mono_lcm(la, lb)
    m1 = tuple(x - y for x, y in zip(m, la))
    m2 = tuple(x - y for x, y in zip(m, lb))
    s1, s2 = a.sig.mul(m1), b.sig.mul(m2)
    k1, k2 = mo.key(s1), mo.key(s2)
    if k1 == k2:
        return None
    if k1 > k2:
        sig, mult, first, second = s1, m1, a, b
    else:
        sig, mult, first, second = s2, m2, b, a
    gw = None
    if mo.kind == "gw":
        gw = sum(sig.mono) + mo.lead_degrees[sig.index - 1]
    return JPair(sig, mult, first, second, m, gw)


def block_bounds(basis: Sequence[SigPoly], index: int) -> tuple[int, int]:
    """Half-open ``[jb, je)`` range of the elements whose signature index is ``index``."""
    key = _sig_index
    return bisect_left(basis, index, key=key), bisect_right(basis, index, key=key)


def _sig_index(sp: SigPoly) -> int:
    return sp.sig.index


def f5_rewritable(cp: JPair, basis: Sequence[SigPoly]) -> bool:
    """Scan cp's index block from the end; the first divisor decides."""
    jb, je = block_bounds(basis, cp.sig.index)
    for i in range(je - 1, jb - 1, -1):
        b = basis[i]
        if sig_divides(b.sig, cp.sig):
            return b is not cp.first
    return False


def _check_insertable(sp: SigPoly) -> None:
    if not sp.poly:
        raise ValueError("syzygies are not inserted into the basis")


def insert_by_decreasing_l(basis: list[SigPoly], sp: SigPoly, base) -> int:
    """Insert after the last block element that is l-greater or equal; return position."""
    _check_insertable(sp)
    jb, je = block_bounds(basis, sp.sig.index)
    new = LeadingPair(sp.sig, sp.poly.lm)
    for i in range(je - 1, jb - 1, -1):
        b = basis[i]
        if cmp_l(LeadingPair(b.sig, b.poly.lm), new, base) >= 0:
            basis.insert(i + 1, sp)
            return i + 1
    basis.insert(jb, sp)
    return jb


def insert_by_index(basis: list[SigPoly], sp: SigPoly) -> int:
    _check_insertable(sp)
    _, je = block_bounds(basis, sp.sig.index)
    basis.insert(je, sp)
    return je


def insert_f5gen(basis: list[SigPoly], sp: SigPoly, first: SigPoly | None,
                 policy: str = "block-end") -> int:
    """Insert somewhere after ``first`` inside sp's block, per ``policy``."""
    _check_insertable(sp)
    if policy not in INSERT_POLICIES:
        raise ValueError(f"unknown insertion policy {policy!r}")
    jb, je = block_bounds(basis, sp.sig.index)
    if policy == "block-end" or first is None:
        pos = je
    else:
        pos = basis.index(first) + 1
    if first is not None and not jb <= basis.index(first) < pos <= je:
        raise AssertionError("F5GEN insertion must follow the first component")
    basis.insert(pos, sp)
    return pos


@dataclass
class Stats:
    jpairs_created: int = 0
    jpairs_discarded_ts: int = 0
    jpairs_discarded_f5: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    psyz_size: int = 0
    loop_iterations: int = 0
    reduction_steps: int = 0
    identity_checks: int = 0
    identity_violations: int = 0

    def as_dict(self, verify: bool = False) -> dict:
        keys = STAT_KEYS + (("identity_checks", "identity_violations") if verify else ())
        return {k: getattr(self, k) for k in keys}

    def format(self, verify: bool = False) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.as_dict(verify).items())


@dataclass
class GBResult:
    basis: list[Polynomial]
    sigpolys: list[SigPoly]
    psyz: list[SigPoly]
    stats: Stats
    trace: list[str]
    popped: list[Signature]
    inputs: list[Polynomial]
    module_order: ModuleOrder | None
    variant: str
    mode: str = "fast"

    def sorted_basis(self) -> list[Polynomial]:
        return sorted(self.basis, key=lambda f: f.lead_key)


class Engine:
    def __init__(self, variant: str, polys: Sequence[Polynomial], module_order: str = "pot",
                 mode: str = "fast", criteria: bool = True, insert: str = "block-end",
                 trace: bool = False):
        if variant not in VARIANTS:
            raise ConfigurationError(f"unknown variant {variant!r}")
        if mode not in MODES:
            raise ConfigurationError(f"unknown mode {mode!r}")
        if insert not in INSERT_POLICIES:
            raise ConfigurationError(f"unknown insertion policy {insert!r}")
        if not polys:
            raise ValueError("no input polynomials")
        self.variant = variant
        self.ring: PolyRing = polys[0].ring
        self.mode = mode
        self.verify = mode == "verify"
        self.criteria = criteria
        self.insert_policy = insert
        self.tracing = trace
        self.trace: list[str] = []
        self.stats = Stats()
        self.popped: list[Signature] = []
        self.f = interreduce(polys)
        self.d = len(self.f)
        self.basis: list[SigPoly] = []
        self.psyz: dict[int, list[SigPoly]] = {}
        self.cps: dict[Signature, JPair] = {}
        self._heap: list = []
        self._counter = 0
        self._processed: set[Signature] = set()
        self.mo: ModuleOrder | None = None
        if not self.f:
            return
        base = self.ring.order
        if module_order == "gw" and not base.graded:
            # still run the sampled check so the caller gets a counterexample
            mo = ModuleOrder("gw", base, tuple(sum(f.lm) for f in self.f))
            report = check_compatibility(mo, samples=200)
            raise IncompatibleOrdersError(
                f"gw module order is not compatible with {base.kind}: {report}")
        self.mo = make_module_order(module_order, base, [sum(f.lm) for f in self.f])
        report = check_compatibility(self.mo, samples=200)
        if not report.passed:
            raise IncompatibleOrdersError(str(report))

    # -- bookkeeping -----------------------------------------------------------

    def _emit(self, kind: str, sig: Signature, lead: Monomial | None, pos: int | None = None):
        if not self.tracing:
            return
        line = (f"EVENT kind={kind} sig={format_signature(sig, self.ring)} "
                f"lead={format_lead(lead, self.ring)}")
        if pos is not None:
            line += f" pos={pos}"
        self.trace.append(line)

    def _check_identity(self, sp: SigPoly) -> None:
        self.stats.identity_checks += 1
        ok = vec_dot(sp.u, self.f) == sp.poly and vec_signature(sp.u, self.mo) == sp.sig
        if not ok:
            self.stats.identity_violations += 1
            log.error("identity u.f = p violated at %s", sp.sig)

    def _store(self, cp: JPair) -> None:
        self.stats.jpairs_created += 1
        self._emit("jpair", cp.sig, cp.lead)
        if cp.sig in self._processed:
            return
        inc = self.cps.get(cp.sig)
        if inc is not None:
            if self.variant == "gvwhs":
                key = self.ring.order.key
                replace = key(cp.lead) < key(inc.lead)
            else:
                replace = self.basis.index(cp.first) > self.basis.index(inc.first)
            if not replace:
                return
        self.cps[cp.sig] = cp
        self._counter += 1
        heapq.heappush(self._heap, (self.mo.key(cp.sig), self._counter, cp))

    def _pop(self) -> JPair | None:
        while self._heap:
            _, _, cp = heapq.heappop(self._heap)
            if self.cps.get(cp.sig) is cp:
                del self.cps[cp.sig]
                return cp
        return None

    def _add_syzygy(self, syz: SigPoly) -> bool:
        if self.verify:
            self.stats.identity_checks += 1
            if vec_dot(syz.u, self.f):
                self.stats.identity_violations += 1
                log.error("syzygy identity u.f = 0 violated at %s", syz.sig)
        lst = self.psyz.setdefault(syz.sig.index, [])
        for s in lst:
            if sig_divides(s.sig, syz.sig):
                return False
        lst[:] = [s for s in lst if not sig_divides(syz.sig, s.sig)]
        lst.append(syz)
        return True

    def _principal_syzygy(self, new: SigPoly, b: SigPoly) -> SigPoly | None:
        """Signature data for ``g*u_b - g_b*u``; None when it cannot be determined."""
        zero = self.ring.zero()
        if self.verify:
            u = tuple(x - y for x, y in zip(vec_scale_poly(new.poly, b.u),
                                             vec_scale_poly(b.poly, new.u)))
            sig = vec_signature(u, self.mo)
            return None if sig is None else SigPoly(sig, zero, u)
        s1 = b.sig.mul(new.poly.lm)
        s2 = new.sig.mul(b.poly.lm)
        k1, k2 = self.mo.key(s1), self.mo.key(s2)
        if k1 == k2:
            return None
        return SigPoly(s1 if k1 > k2 else s2, zero)

    def _update_psyz(self, new: SigPoly, others: Sequence[SigPoly]) -> None:
        for b in others:
            syz = self._principal_syzygy(new, b)
            if syz is not None:
                self._add_syzygy(syz)

    def _syzygies(self, index: int) -> list[SigPoly]:
        return self.psyz.get(index, [])

    # -- main loop --------------------------------------------------------------

    def _init(self) -> None:
        one = mono_one(self.ring.n)
        inputs = []
        for i, fi in enumerate(self.f, start=1):
            u = unit_vector(self.ring, self.d, i) if self.verify else None
            inputs.append(SigPoly(Signature(one, i), fi, u))
        for j in range(self.d):
            self._update_psyz(inputs[j], inputs[:j])
        if self.variant == "gvwhs":
            for sp in inputs:
                self._store(JPair(sp.sig, one, sp, None, sp.poly.lm))
        else:
            self.basis.extend(inputs)
            for j in range(self.d):
                for i in range(j):
                    cp = make_jpair(inputs[j], inputs[i], self.mo)
                    if cp is not None:
                        self._store(cp)

    def _discarded(self, cp: JPair) -> bool:
        if not self.criteria:
            return False
        pair = cp.pair()
        if self.variant == "gvwhs":
            sources = self._syzygies(cp.sig.index) + self.basis
            if is_ts_rewritable(pair, sources, self.mo):
                self.stats.jpairs_discarded_ts += 1
                self._emit("discard-ts", cp.sig, cp.lead)
                return True
            return False
        if is_ts_rewritable(pair, self._syzygies(cp.sig.index), self.mo):
            self.stats.jpairs_discarded_ts += 1
            self._emit("discard-ts", cp.sig, cp.lead)
            return True
        if f5_rewritable(cp, self.basis):
            self.stats.jpairs_discarded_f5 += 1
            self._emit("discard-f5", cp.sig, cp.lead)
            return True
        return False

    def _insert(self, sp: SigPoly, cp: JPair) -> int:
        if self.variant == "gvwhs":
            self.basis.append(sp)
            return len(self.basis) - 1
        if self.variant == "f5g":
            return insert_by_decreasing_l(self.basis, sp, self.ring.order)
        if self.variant == "f5b":
            return insert_by_index(self.basis, sp)
        return insert_f5gen(self.basis, sp, cp.first, self.insert_policy)

    def _on_step(self, sp: SigPoly) -> None:
        self.stats.reduction_steps += 1
        if self.verify:
            self._check_identity(sp)

    def run(self) -> GBResult:
        if not self.f:
            log.warning("input generates the zero ideal; returning an empty basis")
            return self._result()
        self._init()
        while True:
            cp = self._pop()
            if cp is None:
                break
            self.stats.loop_iterations += 1
            self.popped.append(cp.sig)
            self._processed.add(cp.sig)
            if self._discarded(cp):
                continue
            sp = cp.first.mul_term(cp.multiplier)
            if self.verify:
                self._check_identity(sp)
            self.stats.reductions += 1
            sp = tm_reduce_full(sp, self.basis, self.mo, self._on_step).monic()
            self._emit("reduce", sp.sig, sp.lead)
            if not sp.poly:
                self.stats.zero_reductions += 1
                self._add_syzygy(sp)
                continue
            if self.variant == "gvwhs":
                others = list(self.basis)
                for b in others:
                    jp = make_jpair(sp, b, self.mo)
                    if jp is not None:
                        self._store(jp)
                self._update_psyz(sp, others)
                pos = self._insert(sp, cp)
                self._emit("insert", sp.sig, sp.lead, pos)
            else:
                pos = self._insert(sp, cp)
                self._emit("insert", sp.sig, sp.lead, pos)
                others = [b for b in self.basis if b is not sp]
                for b in others:
                    jp = make_jpair(sp, b, self.mo)
                    if jp is not None:
                        self._store(jp)
                self._update_psyz(sp, others)
        return self._result()

    def _result(self) -> GBResult:
        self.stats.basis_size = len(self.basis)
        psyz = [s for idx in sorted(self.psyz) for s in self.psyz[idx]]
        self.stats.psyz_size = len(psyz)
        return GBResult(
            basis=[b.poly for b in self.basis],
            sigpolys=list(self.basis),
            psyz=psyz,
            stats=self.stats,
            trace=self.trace,
            popped=self.popped,
            inputs=list(self.f),
            module_order=self.mo,
            variant=self.variant,
            mode=self.mode,
        )


def run(variant: str, polys: Sequence[Polynomial], module_order: str = "pot",
        mode: str = "fast", criteria: bool = True, insert: str = "block-end",
        trace: bool = False) -> GBResult:
    """Compute a Groebner basis of ``<polys>`` with one of the signature-based variants."""
    return Engine(variant, polys, module_order, mode, criteria, insert, trace).run()
