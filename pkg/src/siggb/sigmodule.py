"""Signatures ``mono * e_index`` and admissible module orders on them.

Two orders are offered, both index-first (a smaller index is a smaller
signature):

* ``pot``: index, then the base monomial order.
* ``gw``: index, then the g-weighted degree ``deg(mono) + deg(lm(f_index))``,
  then the base monomial order.

An order is *compatible* with its base when, within a fixed index,
``sigma*e_j <= tau*e_j`` exactly when ``sigma <= tau``.  The engines refuse
to run on an incompatible pair.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from .poly import Monomial, MonomialOrder, mono_divides, mono_mul

MODULE_ORDER_KINDS = ("pot", "gw")


class ConfigurationError(ValueError):
    pass


class Signature(NamedTuple):
    mono: Monomial
    index: int  # 1-based

    def mul(self, t: Monomial) -> Signature:
        return Signature(mono_mul(self.mono, t), self.index)


def sig_divides(a: Signature, b: Signature) -> bool:
    return a.index == b.index and mono_divides(a.mono, b.mono)


@dataclass(frozen=True)
class ModuleOrder:
    kind: str
    base: MonomialOrder
    lead_degrees: tuple = ()
    key: Callable[[Signature], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in MODULE_ORDER_KINDS:
            raise ConfigurationError(f"unknown module order {self.kind!r}")
        object.__setattr__(self, "lead_degrees", tuple(self.lead_degrees))
        base_key = self.base.key
        if self.kind == "pot":
            def key(s):
                return (s.index,) + base_key(s.mono)
        else:
            if not self.lead_degrees:
                raise ConfigurationError("gw module order needs input lead degrees")
            degs = self.lead_degrees

            def key(s):
                return (s.index, sum(s.mono) + degs[s.index - 1]) + base_key(s.mono)
        object.__setattr__(self, "key", key)

    @property
    def d(self) -> int | None:
        return len(self.lead_degrees) or None

    def cmp(self, a: Signature, b: Signature) -> int:
        if self.lead_degrees:
            for s in (a, b):
                if not 1 <= s.index <= len(self.lead_degrees):
                    raise ValueError(f"signature index {s.index} out of range")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def sig_cmp(order: ModuleOrder, a: Signature, b: Signature) -> int:
    return order.cmp(a, b)


@dataclass
class CompatibilityReport:
    passed: bool
    checked: int
    counterexample: tuple | None = None  # (sigma, tau, index)

    def __str__(self):
        if self.passed:
            return f"compatible ({self.checked} comparisons)"
        sigma, tau, j = self.counterexample
        return f"incompatible: sigma={sigma} tau={tau} at index {j}"


def _probe_monomials(n: int, max_deg: int = 2) -> list[Monomial]:
    out = []
    for exps in itertools.product(range(max_deg + 1), repeat=n):
        if sum(exps) <= max_deg:
            out.append(exps)
    return out


def check_compatibility(order: ModuleOrder, samples: int = 1000, seed: int = 0,
                        max_exp: int = 4) -> CompatibilityReport:
    """Randomized check that ``order`` restricted to each index equals its base.

    A small exhaustive probe over low-degree monomials runs first so that
    classic counterexamples (degree-first vs lex) are always found.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    n = order.base.n
    d = len(order.lead_degrees) or 1
    rng = random.Random(seed)
    pairs = []
    if n <= 4:
        probe = _probe_monomials(n)
        pairs.extend(itertools.product(probe, probe))
    for _ in range(samples):
        a = tuple(rng.randint(0, max_exp) for _ in range(n))
        b = tuple(rng.randint(0, max_exp) for _ in range(n))
        pairs.append((a, b))
    checked = 0
    for sigma, tau in pairs:
        base = order.base.cmp(sigma, tau)
        for j in range(1, d + 1):
            checked += 1
            if order.cmp(Signature(sigma, j), Signature(tau, j)) != base:
                return CompatibilityReport(False, checked, (sigma, tau, j))
    return CompatibilityReport(True, checked)


def make_module_order(kind: str, base: MonomialOrder,
                      lead_degrees: Sequence[int] = ()) -> ModuleOrder:
    """Build a module order, rejecting the ones incompatible with ``base``."""
    if kind == "gw" and not base.graded:
        raise ConfigurationError(
            f"gw module order needs a graded base order, got {base.kind}")
    return ModuleOrder(kind, base, tuple(lead_degrees))
