import pytest
from hypothesis import given, strategies as st

from siggb.poly import MonomialOrder, mono_divides, mono_mul
from siggb.sigmodule import (ConfigurationError, ModuleOrder, Signature, check_compatibility,
                             make_module_order, sig_cmp, sig_divides)

from conftest import monomials

GREVLEX = MonomialOrder("grevlex", 3)
LEX2 = MonomialOrder("lex", 2)
POT = make_module_order("pot", GREVLEX)
GW = make_module_order("gw", GREVLEX, (2, 1, 3))
sigs = st.builds(Signature, monomials(3), st.integers(1, 3))


def test_sig_cmp_examples():
    pot_lex = make_module_order("pot", LEX2)
    assert sig_cmp(pot_lex, Signature((0, 1), 1), Signature((1, 0), 2)) == -1
    gw = make_module_order("gw", MonomialOrder("grevlex", 2), (2, 1))
    assert sig_cmp(gw, Signature((0, 0), 1), Signature((1, 0), 2)) == -1
    s = Signature((1, 2, 0), 2)
    assert sig_cmp(POT, s, s) == 0 and sig_cmp(GW, s, s) == 0


def test_gw_uses_weighted_degree_within_index():
    # equal weighted degree falls back to grevlex; lower weighted degree wins first
    lex_deg = make_module_order("gw", MonomialOrder("grlex", 2), (1,))
    assert lex_deg.cmp(Signature((0, 2), 1), Signature((1, 0), 1)) == 1


def test_index_out_of_range():
    with pytest.raises(ValueError):
        GW.cmp(Signature((0, 0, 0), 4), Signature((0, 0, 0), 1))


def test_sig_divides_examples():
    assert sig_divides(Signature((1, 0), 1), Signature((2, 1), 1))
    assert not sig_divides(Signature((1, 0), 1), Signature((2, 1), 2))
    s = Signature((3, 1), 2)
    assert sig_divides(s, s)


def test_gw_configuration_errors():
    with pytest.raises(ConfigurationError):
        ModuleOrder("gw", GREVLEX)
    with pytest.raises(ConfigurationError):
        make_module_order("gw", LEX2, (1, 1))
    with pytest.raises(ConfigurationError):
        ModuleOrder("top", GREVLEX)


@pytest.mark.parametrize("mo", [POT, GW], ids=["pot", "gw"])
@given(a=sigs, b=sigs, c=sigs, t=monomials(3))
def test_module_order_axioms(mo, a, b, c, t):
    one = Signature((0, 0, 0), a.index)
    assert mo.cmp(one, a) <= 0
    ab = mo.cmp(a, b)
    assert ab == -mo.cmp(b, a)
    assert (ab == 0) == (a == b)
    if a.index == b.index:
        assert mo.cmp(a.mul(t), b.mul(t)) == ab
    if ab <= 0 and mo.cmp(b, c) <= 0:
        assert mo.cmp(a, c) <= 0
    if sig_divides(a, b):
        assert ab <= 0


@pytest.mark.parametrize("mo", [POT, GW], ids=["pot", "gw"])
def test_compatibility_passes(mo):
    rep = check_compatibility(mo, samples=1000)
    assert rep.passed and rep.checked >= 1000 and rep.counterexample is None


def test_gw_over_lex_is_incompatible():
    mo = ModuleOrder("gw", LEX2, (1, 1))
    rep = check_compatibility(mo, samples=1000)
    assert not rep.passed
    sigma, tau, j = rep.counterexample
    assert LEX2.cmp(sigma, tau) != mo.cmp(Signature(sigma, j), Signature(tau, j))
    assert "incompatible" in str(rep)


def test_compatibility_rejects_bad_samples():
    with pytest.raises(ValueError):
        check_compatibility(POT, samples=0)


def test_signature_mul():
    assert Signature((1, 0, 0), 2).mul((0, 1, 1)) == Signature((1, 1, 1), 2)
