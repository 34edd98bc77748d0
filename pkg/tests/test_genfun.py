import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shifted_kpq.algebra import BETA, T, BetaInt, MultiPoly, beta_poly, xvar
from shifted_kpq.genfun import (genfun, genfun_one_var, is_symmetric, ribbon_closed_form,
                                set_last_var_zero)
from shifted_kpq.shapes import shifted_diagram, size, strict_partitions_up_to, sub_partitions
from shifted_kpq.tableaux import enumerate_tableaux, weight

x1, x2 = xvar(1), xvar(2)
beta = beta_poly()

FAMILIES = ("GP", "GQ", "gp", "gq", "jp", "jq")
TABLEAU_FAMILY = {"GP": "SVT_P", "GQ": "SVT_Q", "gp": "PP_P", "gq": "PP_Q", "jp": "BT_P", "jq": "BT_Q"}


def by_enumeration(family, lam, mu, nvars):
    """Sum of signed weights over explicitly enumerated tableaux."""
    shape = shifted_diagram(lam, mu)
    n = len(shape)
    total = MultiPoly()
    for t in enumerate_tableaux(shape, TABLEAU_FAMILY[family], nvars):
        w = weight(t)
        mono = MultiPoly.const(1)
        for v, e in w.exps.items():
            mono = mono * xvar(v) ** e
        if family in ("GP", "GQ"):
            coef = BetaInt.beta(w.size - n)
        else:
            coef = BetaInt.beta(n - w.size, (-1) ** (n - w.size))
        total = total + mono * MultiPoly.const(coef)
    return total


def test_small_values():
    assert genfun("GQ", (1,), (), 1) == 2 * x1 + beta * x1 ** 2
    assert genfun("jq", (2,), (), 1) == 2 * x1 ** 2 - beta * x1
    assert genfun("gp", (1,), (), 3) == x1 + x2 + xvar(3)
    assert genfun("gp", (2,), (3, 1), 3).is_zero()


def test_one_variable_values():
    assert genfun_one_var("jp", (3,)) == T * (T - BETA) ** 2
    assert genfun_one_var("jq", (1,)) == 2 * T
    assert genfun_one_var("gq", (2,)) == 2 * T * T - BETA * T


def test_one_variable_closed_forms():
    for n in range(2, 11):
        assert genfun_one_var("jp", (n,)) == T * (T - BETA) ** (n - 1)
        assert genfun_one_var("jq", (n,)) == (2 * T * T - BETA * T) * (T - BETA) ** (n - 2)


def test_ribbon_closed_form_worked_example():
    want = (2 * T * T - BETA * T) * (T - BETA) * T ** 3 * (2 * T - BETA)
    assert ribbon_closed_form("jq", (8, 5, 3, 1), (5, 4, 1)) == want
    assert genfun_one_var("jq", (8, 5, 3, 1), (5, 4, 1)) == want


def test_ribbon_closed_form_one_row():
    for n in range(2, 8):
        assert ribbon_closed_form("jq", (n,), ()) == genfun_one_var("jq", (n,))
        assert ribbon_closed_form("jp", (n,), ()) == genfun_one_var("jp", (n,))


@pytest.mark.parametrize("family", FAMILIES)
def test_agrees_with_enumeration(family):
    for lam in strict_partitions_up_to(5):
        for mu in sub_partitions(lam):
            for nvars in (1, 2):
                assert genfun(family, lam, mu, nvars) == by_enumeration(family, lam, mu, nvars)


def test_symmetry_examples():
    assert is_symmetric(genfun("jq", (3, 1), (), 3), 3)
    assert not is_symmetric(x1 ** 2 * x2, 2)
    assert is_symmetric(genfun("GP", (2, 1), (), 3), 3)


def test_stability():
    for lam in strict_partitions_up_to(4):
        for mu in sub_partitions(lam):
            for fam in FAMILIES:
                assert set_last_var_zero(genfun(fam, lam, mu, 3), 3) == genfun(fam, lam, mu, 2)


def test_gq_gp_one_row():
    for n in range(1, 6):
        rhs = 2 * genfun("gp", (n,), (), 3)
        if n > 1:
            rhs = rhs + beta * genfun("gp", (n - 1,), (), 3)
        assert genfun("gq", (n,), (), 3) == rhs


def test_double_slash_variants():
    for lam in strict_partitions_up_to(5):
        assert genfun("GPss", lam, (), 2) == genfun("GP", lam, (), 2)
        assert genfun("GQss", lam, (), 2) == genfun("GQ", lam, (), 2)
    assert genfun("GPss", (3,), (2, 1), 2).is_zero()
    # (2,1)//(1) sums GP_{(2,1)/(1)} and beta GP_{(2,1)}
    want = genfun("GP", (2, 1), (1,), 2) + beta * genfun("GP", (2, 1), (), 2)
    assert genfun("GPss", (2, 1), (1,), 2) == want


def test_beta_zero_collapse():
    for lam in strict_partitions_up_to(5):
        p = genfun("GP", lam, (), 3).with_beta_zero()
        q = genfun("GQ", lam, (), 3).with_beta_zero()
        assert genfun("gp", lam, (), 3).with_beta_zero() == p
        assert genfun("jq", lam, (), 3).with_beta_zero() == q
        assert q == p * 2 ** len(lam)


def test_unknown_family():
    with pytest.raises(ValueError):
        genfun("XY", (1,))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(strict_partitions_up_to(6))), st.sampled_from(FAMILIES), st.data())
def test_homogeneity(lam, family, data):
    mu = data.draw(st.sampled_from(list(sub_partitions(lam))))
    f = genfun(family, lam, mu, 2)
    n = size(lam) - size(mu)
    # set-valued families are homogeneous when beta has degree -1, the others when it has degree 1
    sign = -1 if family in ("GP", "GQ") else 1
    for (m, k), _ in f.raw_items():
        assert m.degree + sign * k == n
