from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from siggb.problem import make_ring, parse_polynomial

settings.register_profile("repo", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def monomials(n: int, max_exp: int = 4):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def polynomials(ring, max_terms: int = 5, max_exp: int = 3):
    term = st.tuples(monomials(ring.n, max_exp), st.integers(0, ring.p - 1))
    return st.lists(term, max_size=max_terms).map(ring.from_terms)


@pytest.fixture
def lex7():
    return make_ring(7, ("x", "y"), "lex")


@pytest.fixture
def P(lex7):
    def parse(text, ring=None):
        return parse_polynomial(text, ring or lex7)
    return parse


ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""
    def record(number: int, name: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE[number] = f"criterion {number} [PRIMARY] {name}: {status}" + (
            f" ({detail})" if detail else "")
        print(ACCEPTANCE[number])
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
