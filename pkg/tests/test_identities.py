import pytest

from shifted_kpq import identities as ids
from shifted_kpq.algebra import MultiPoly, beta_poly, xvar
from shifted_kpq.genfun import genfun
from shifted_kpq.shapes import (contains, removable_corners, ribbon_partners, shifted_diagram,
                                size, strict_partitions_up_to, unshifted_diagram)

beta = beta_poly()


# -- Cauchy identities ----------------------------------------------------

def test_cauchy_small():
    assert ids.verify_cauchy("QP", 1, 1, 4).passed
    assert ids.verify_cauchy("PQ", 1, 1, 4).passed
    assert ids.verify_cauchy("skewQ", 1, 1, 3, (1,), (1,)).passed
    assert ids.verify_cauchy("QP", 2, 3, 0).passed


def test_cauchy_report_shape():
    report = ids.verify_cauchy("QP", 2, 2, 5).to_json()
    assert report == {"check": "cauchy-QP",
                      "params": {"kind": "QP", "nx": 2, "ny": 2, "max_deg": 5, "mu": [], "nu": []},
                      "status": "pass", "residual_terms": 0, "max_checked_degree": 5}


def test_cauchy_detects_wrong_pairing(monkeypatch):
    # pairing GQ with gq instead of gp must leave a nonzero residual
    real = ids.genfun

    def swapped(family, *args, **kwargs):
        return real("gq" if family == "gp" else family, *args, **kwargs)
    monkeypatch.setattr(ids, "genfun", swapped)
    res = ids.verify_cauchy("QP", 1, 1, 4)
    assert not res.passed and len(res.value) > 0


def test_cauchy_preconditions():
    with pytest.raises(ValueError):
        ids.verify_cauchy("QP", 1, 1, 3, (1,), ())
    with pytest.raises(ValueError):
        ids.verify_cauchy("XX", 1, 1, 3)


def test_dual_cauchy_sweep():
    inners = list(strict_partitions_up_to(2))
    for kind in ("skewP", "skewQ"):
        for mu in inners:
            for nu in inners:
                assert ids.verify_cauchy(kind, 1, 1, 4, mu, nu).passed


# -- Pieri coefficients ----------------------------------------------------

def test_ribbon_counts_of_worked_example():
    lam, nu = (5, 4, 1), (8, 5, 3, 1)
    assert ids.ribbon_tableaux_count(nu, lam) == 9
    assert ids.pieri_coeff("chat", lam, nu) == 12


def test_one_row_pieri_values():
    for n in range(1, 7):
        assert ids.pieri_coeff("bhat", (), (n,), n) == 1
        for nu in strict_partitions_up_to(n):
            if nu != (n,) and size(nu) == n:
                assert ids.pieri_coeff("bhat", (), nu, n) == 0


def test_pieri_not_contained_is_zero():
    assert ids.pieri_coeff("bhat", (3,), (2, 1), 1) == 0
    assert ids.pieri_coeff("chat", (3,), (2, 1), 1) == 0


def test_cribbons_of_a_shape_with_itself():
    for nu in strict_partitions_up_to(7):
        if nu:
            assert ids.pieri_coeff("chat", nu, nu) == 4 ** len(removable_corners(nu))


def test_pieri_oracle_agrees():
    for nu in strict_partitions_up_to(5):
        for lam in strict_partitions_up_to(size(nu)):
            if contains(nu, lam):
                for n in range(size(nu) + 1):
                    for kind in ("bhat", "chat"):
                        assert ids.pieri_coeff(kind, lam, nu, n) == ids.pieri_coeff_oracle(kind, lam, nu, n)


def test_chat_ahat_relation():
    for nu in strict_partitions_up_to(5):
        for lam in strict_partitions_up_to(size(nu)):
            for n in range(1, 4):
                assert ids.chat_ahat_relation_check(lam, nu, n)


# -- expansion tables -----------------------------------------------------

def test_expansion_tables_are_nonnegative_integers():
    for Lam in strict_partitions_up_to(7):
        if not Lam:
            continue
        for Psi in ribbon_partners(Lam):
            for kind in ("y", "z"):
                assert ids.table_clauses(kind, Lam, Psi) == []


def test_y_leading_coefficient():
    Lam, Psi = (8, 5, 3, 1), (5, 4, 1)
    table = ids.expansion_table("y", Lam, Psi)
    # scc = 0 and mcc = 2 for this ribbon
    assert table[size(Lam) - size(Psi)] == 2


def test_lemma_difference_special_values():
    for Lam in [(4, 2), (5, 2, 1), (6, 3, 1), (3, 1)]:
        special = (Lam[0],) + Lam[2:]
        assert ids.lemma_difference("jq", Lam, special) == (1, 1)
        assert ids.lemma_difference_check("jp", Lam, special)
    assert ids.lemma_difference_check("jq", (2, 1), (1,))
    assert ids.lemma_difference_check("jp", (2, 1), (1,))


def test_lemma_difference_sweep():
    for Lam in strict_partitions_up_to(8):
        if len(Lam) >= 2:
            for Psi in ribbon_partners(Lam):
                assert ids.lemma_difference_check("jq", Lam, Psi)
                assert ids.lemma_difference_check("jp", Lam, Psi)


def test_lemma_difference_precondition():
    with pytest.raises(ValueError):
        ids.lemma_difference("jq", (3,), (1,))


def test_skew_by_one_row_expansion():
    for Lam in [(3, 1), (4, 2), (4, 2, 1), (5, 3)]:
        for n in range(0, Lam[0] + 1):
            assert ids.jq_lemma2_check("jq", Lam, n).passed
            assert ids.jq_lemma2_check("jp", Lam, n).passed


# -- structure constants --------------------------------------------------

def test_hatted_constants_vanish_above_degree():
    for lam, mu in [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,))]:
        for kind in ("ahat", "bhat_full", "chat_full"):
            table = ids.structure_constants(kind, lam, mu)
            assert all(size(nu) <= size(lam) + size(mu) for nu, v in table.entries.items() if v)
            assert not table.partial


def test_unhatted_constants_vanish_below_degree():
    table = ids.structure_constants("a", (1,), (1,), 4)
    assert table.partial
    assert all(size(nu) >= 2 for nu, v in table.entries.items() if v)
    # the top layer is the classical product P_1 P_1 = P_2
    assert table.entries[(2,)] == 1


def test_hatted_constants_rebuild_the_product():
    for lam, mu in [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,))]:
        table = ids.structure_constants("ahat", lam, mu)
        d = size(lam) + size(mu)
        want = genfun("gp", lam, (), 3) * genfun("gp", mu, (), 3)
        got = MultiPoly()
        for nu, c in table.entries.items():
            got = got + c * beta ** (d - size(nu)) * genfun("gp", nu, (), 3)
        assert got == want


def test_structure_duality():
    res = ids.structure_duality_check(4)
    assert res.passed, res.notes


def test_unhatted_kinds_need_a_cap():
    with pytest.raises(ValueError):
        ids.structure_constants("a", (1,), (1,))


# -- products -------------------------------------------------------------

def test_one_row_products():
    assert ids.one_row_product_check((1,), 1, "jq", 2).passed
    assert ids.one_row_product_check((2, 1), 2, "jp", 3).passed


def test_shape_product_worked_example():
    rho, tau = ids.example_shapes()
    assert rho == shifted_diagram((3, 2))
    assert tau == unshifted_diagram((2, 2), (1,))
    for fam in ("jq", "jp"):
        assert ids.shape_product_check(rho, tau, fam).passed


# -- operators ------------------------------------------------------------

def test_operator_identities():
    assert ids.operator_check("inverse", 6, 4).passed
    res = ids.operator_check("commute", 5, 3)
    assert res.passed and res.params["entries_compared"] > 0


def test_operator_check_inconclusive_when_nothing_fits():
    assert ids.operator_check("commute", 2, 3).status == "inconclusive"


def test_operator_caps_are_validated():
    with pytest.raises(ValueError):
        ids.operator_check("inverse", 0, 3)


# -- beta = 0 --------------------------------------------------------------

def test_beta_zero_and_one_row_relation():
    for lam in strict_partitions_up_to(5):
        assert ids.beta_zero_collapse_check(lam, 3).passed
    for n in range(1, 6):
        assert ids.gq_gp_one_row_check(n, 3).passed


def test_combine_statuses():
    ok = ids.Residual("a", MultiPoly(), 1)
    bad = ids.Residual("b", xvar(1), 1)
    unsure = ids.Residual("c", MultiPoly(), 1, status="inconclusive")
    assert ids.combine("x", [ok, ok]).status == "pass"
    assert ids.combine("x", [ok, unsure]).status == "inconclusive"
    assert ids.combine("x", [ok, bad, unsure]).status == "fail"
    assert ids.combine("x", []).status == "inconclusive"
