"""Acceptance gate: every primary criterion, at its stated tolerance.

Each test records a single ``criterion N [PRIMARY] ...: PASS|FAIL`` line, which is
printed as it runs and again in the terminal summary.
"""
from __future__ import annotations

import io
import os
import random
import subprocess
import sys
import time
from functools import lru_cache

import pytest

from siggb.cli import main
from siggb.engine import run
from siggb.oracle import buchberger, find_misplaced_pairs, reduce_basis
from siggb.poly import MonomialOrder, mono_divides, mono_mul
from siggb.problem import format_problem, gen_benchmark
from siggb.sigmodule import ModuleOrder, Signature, check_compatibility, make_module_order
from siggb.sigpoly import vec_dot

VARIANTS = ("gvwhs", "f5g", "f5b", "f5gen")
MODULE_ORDERS = ("pot", "gw")
CORPUS = [(f, n) for f in ("cyclic", "katsura") for n in (3, 4, 5)]
SAMPLES = 1000


@lru_cache(maxsize=None)
def problem(family, n):
    return gen_benchmark(family, n)


@lru_cache(maxsize=None)
def oracle(family, n):
    return tuple(buchberger(problem(family, n).polys))


@lru_cache(maxsize=None)
def timed_run(family, n, variant, module_order, criteria=True, trace=False):
    t0 = time.perf_counter()
    res = run(variant, problem(family, n).polys, module_order=module_order,
              criteria=criteria, trace=trace)
    return res, time.perf_counter() - t0


def test_criterion_1_correctness_vs_oracle(acceptance):
    failures, slow, worst = [], [], 0.0
    for family, n in CORPUS:
        want = list(oracle(family, n))
        for variant in VARIANTS:
            for mo in MODULE_ORDERS:
                res, dt = timed_run(family, n, variant, mo)
                worst = max(worst, dt)
                if reduce_basis(res.basis) != want:
                    failures.append(f"{family}-{n}/{variant}/{mo}")
                if dt >= 10.0:
                    slow.append(f"{family}-{n}/{variant}/{mo} {dt:.1f}s")
    ok = not failures and not slow
    acceptance(1, "correctness vs Buchberger", ok,
               f"{len(CORPUS) * len(VARIANTS) * len(MODULE_ORDERS)} runs, slowest {worst:.2f}s"
               + (f", mismatches {failures}" if failures else "")
               + (f", over 10s {slow}" if slow else ""))
    assert ok


def test_criterion_2_termination_and_monotone_signatures(acceptance):
    violations = 0
    runs = 0
    for family, n in CORPUS:
        for variant in VARIANTS:
            for mo in MODULE_ORDERS:
                res, _ = timed_run(family, n, variant, mo)
                runs += 1
                keys = [res.module_order.key(s) for s in res.popped]
                violations += sum(a > b for a, b in zip(keys, keys[1:]))
    ok = violations == 0
    acceptance(2, "termination and monotone popped signatures", ok,
               f"{runs} runs terminated, {violations} order violations")
    assert ok


def test_criterion_3_verification_identities(acceptance):
    checks = violations = 0
    for family, n in (("cyclic", 3), ("katsura", 3)):
        pf = problem(family, n)
        for variant in VARIANTS:
            for mo in MODULE_ORDERS:
                res = run(variant, pf.polys, module_order=mo, mode="verify")
                checks += res.stats.identity_checks
                violations += res.stats.identity_violations
                for sp in res.sigpolys:
                    checks += 1
                    violations += vec_dot(sp.u, res.inputs) != sp.poly
                for syz in res.psyz:
                    checks += 1
                    violations += bool(vec_dot(syz.u, res.inputs))
    ok = violations == 0 and checks > 0
    acceptance(3, "verification-mode identities u.f = p", ok,
               f"{checks} checks, {violations} violations")
    assert ok


def _mono(rng, n, hi=6):
    return tuple(rng.randint(0, hi) for _ in range(n))


def test_criterion_4_order_axioms(acceptance):
    rng = random.Random(2024)
    n = 4
    problems = []
    one = (0,) * n
    for kind in ("lex", "grlex", "grevlex"):
        order = MonomialOrder(kind, n)
        for _ in range(SAMPLES):
            a, b, c = _mono(rng, n), _mono(rng, n), _mono(rng, n)
            ab = order.cmp(a, b)
            if order.cmp(one, a) > 0 or order.cmp(mono_mul(a, c), mono_mul(b, c)) != ab:
                problems.append(("monomial", kind, a, b, c))
            if (ab == 0) != (a == b) or ab != -order.cmp(b, a):
                problems.append(("total", kind, a, b))
            if mono_divides(a, mono_mul(a, c)) and order.cmp(a, mono_mul(a, c)) > 0:
                problems.append(("divisibility", kind, a, c))
    base = MonomialOrder("grevlex", n)
    degs = (1, 2, 3)
    for mo in (make_module_order("pot", base), make_module_order("gw", base, degs)):
        for _ in range(SAMPLES):
            i, j = rng.randint(1, 3), rng.randint(1, 3)
            s, t, c = Signature(_mono(rng, n), i), Signature(_mono(rng, n), j), _mono(rng, n)
            st = mo.cmp(s, t)
            if mo.cmp(Signature(one, i), s) > 0:
                problems.append(("module-min", mo.kind, s))
            if i == j and mo.cmp(s.mul(c), t.mul(c)) != st:
                problems.append(("module-mult", mo.kind, s, t, c))
            if mo.cmp(s, s.mul(c)) > 0:
                problems.append(("module-divisibility", mo.kind, s, c))
    reports = {
        "pot/grevlex": check_compatibility(make_module_order("pot", base), samples=SAMPLES),
        "gw/grevlex": check_compatibility(make_module_order("gw", base, degs), samples=SAMPLES),
        "gw/lex": check_compatibility(ModuleOrder("gw", MonomialOrder("lex", n), degs),
                                      samples=SAMPLES),
    }
    compat_ok = (reports["pot/grevlex"].passed and reports["gw/grevlex"].passed
                 and not reports["gw/lex"].passed
                 and reports["gw/lex"].counterexample is not None)
    ok = not problems and compat_ok
    acceptance(4, "order-axiom suites", ok,
               f"{SAMPLES} samples per suite, {len(problems)} axiom failures, "
               f"gw/lex rejected with {reports['gw/lex'].counterexample}")
    assert ok


def test_criterion_5_criteria_soundness(acceptance):
    changed, worse = [], []
    for family, n in CORPUS:
        want = list(oracle(family, n))
        for variant in VARIANTS:
            on, _ = timed_run(family, n, variant, "pot")
            off, _ = timed_run(family, n, variant, "pot", criteria=False)
            if reduce_basis(off.basis) != want:
                changed.append(f"{family}-{n}/{variant}")
            if on.stats.reductions > off.stats.reductions:
                worse.append(f"{family}-{n}/{variant} {on.stats.reductions}>"
                             f"{off.stats.reductions}")
    ok = not changed and not worse
    acceptance(5, "criteria soundness", ok,
               f"{len(CORPUS) * len(VARIANTS)} on/off pairs"
               + (f", output changed {changed}" if changed else "")
               + (f", more reductions with criteria {worse}" if worse else ""))
    assert ok


def _discarded(res):
    return sorted(line.split()[2] for line in res.trace if "kind=discard" in line)


def test_criterion_6_variant_relationships(acceptance):
    trace_diffs, misplaced = [], []
    for family, n in CORPUS:
        for mo in MODULE_ORDERS:
            gen, _ = timed_run(family, n, "f5gen", mo, trace=True)
            f5b, _ = timed_run(family, n, "f5b", mo, trace=True)
            if "\n".join(gen.trace).encode() != "\n".join(f5b.trace).encode():
                trace_diffs.append(f"{family}-{n}/{mo}")
            f5g, _ = timed_run(family, n, "f5g", mo)
            bad = find_misplaced_pairs(f5g.sigpolys, f5g.module_order.base)
            if bad:
                misplaced.append(f"{family}-{n}/{mo}: {len(bad)}")
    gv, _ = timed_run("cyclic", 3, "gvwhs", "pot", trace=True)
    fg, _ = timed_run("cyclic", 3, "f5g", "pot", trace=True)
    same_discards = _discarded(gv) == _discarded(fg)
    ok = not trace_diffs and not misplaced and same_discards
    acceptance(6, "variant relationships", ok,
               f"F5GEN/F5B trace diffs {trace_diffs or 0}, F5G misplaced {misplaced or 0}, "
               f"cyclic-3 discard sets equal={same_discards} ({len(_discarded(gv))} signatures)")
    assert ok


def _cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue().encode()


def test_criterion_7_determinism(acceptance, tmp_path):
    mismatches = []
    invocations = 0
    for family, n in (("cyclic", 4), ("katsura", 4)):
        path = tmp_path / f"{family}{n}.ideal"
        path.write_text(format_problem(problem(family, n)), encoding="utf-8")
        for algorithm in VARIANTS + ("buchberger",):
            for mo in MODULE_ORDERS:
                argv = ["run", "--algorithm", algorithm, "--module-order", mo, "--trace",
                        "--stats", str(path)]
                invocations += 1
                if _cli(argv) != _cli(argv):
                    mismatches.append(" ".join(argv[:5]))
    # across interpreter processes with different hash seeds
    path = tmp_path / "cyclic4.ideal"
    outputs = set()
    for seed in ("0", "1", "4242"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-m", "siggb", "run", "--algorithm", "f5g",
                               "--trace", "--stats", str(path)],
                              capture_output=True, env=env, check=True)
        outputs.add(proc.stdout)
    ok = not mismatches and len(outputs) == 1
    acceptance(7, "determinism", ok,
               f"{invocations} repeated invocations, {len(mismatches)} differ; "
               f"{len(outputs)} distinct outputs across hash seeds")
    assert ok
