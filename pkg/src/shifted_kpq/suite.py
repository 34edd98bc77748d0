"""The full invariant battery, one function per family of identities.

Each check returns a :class:`~shifted_kpq.identities.Residual`.  Counting checks
(tableau sweeps, coefficient tables) report the number of failing cases as a
constant residual, with the first few failures listed in ``notes``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from . import bender_knuth as bk
from .algebra import MultiPoly, UniPoly
from .genfun import genfun, genfun_one_var, is_symmetric, ribbon_closed_form
from .identities import (Residual, beta_zero_collapse_check, combine, example_shapes,
                         lemma_difference_check, one_row_product_check, operator_check,
                         pieri_coeff, pieri_coeff_oracle, ribbon_tableaux_count,
                         shape_product_check, structure_duality_check, table_clauses,
                         verify_cauchy)
from .shapes import (contains, ribbon_partners, shifted_diagram, size, strict_partitions_up_to,
                     sub_partitions)
from .tableaux import diagonal_primes, enumerate_tableaux, weight_vector

MAX_NOTES = 10


class Tally:
    """Collects pass/fail outcomes of a sweep."""

    def __init__(self, check: str, params: dict | None = None):
        self.check = check
        self.params = dict(params or {})
        self.compared = 0
        self.failures: list[str] = []

    def record(self, ok: bool, what: str) -> None:
        self.compared += 1
        if not ok:
            self.failures.append(what)

    def result(self, degree: int = 0) -> Residual:
        params = dict(self.params, compared=self.compared)
        if self.failures:
            status = "fail"
        elif self.compared == 0:
            status = "inconclusive"
        else:
            status = "pass"
        notes = self.failures[:MAX_NOTES]
        if len(self.failures) > MAX_NOTES:
            notes.append(f"... {len(self.failures) - MAX_NOTES} more")
        return Residual(self.check, MultiPoly.const(len(self.failures)), degree, params, status, notes)


def skew_shapes(max_size: int, min_boxes: int = 1) -> Iterable[tuple]:
    for lam in strict_partitions_up_to(max_size):
        for mu in sub_partitions(lam):
            if size(lam) - size(mu) >= min_boxes:
                yield lam, mu


# -- Cauchy identities ----------------------------------------------------

def cauchy_standard() -> Residual:
    parts = [verify_cauchy(kind, n, n, deg) for kind in ("QP", "PQ") for n, deg in ((2, 6), (3, 5))]
    return combine("cauchy", parts)


def cauchy_dual(max_inner: int = 3) -> Residual:
    parts = []
    inners = list(strict_partitions_up_to(max_inner))
    for kind in ("skewP", "skewQ"):
        for mu in inners:
            for nu in inners:
                parts.append(verify_cauchy(kind, 1, 1, 5, mu, nu))
        parts.append(verify_cauchy(kind, 2, 2, 5))
    return combine("cauchy-dual", parts, {"max_inner": max_inner})


# -- one variable ---------------------------------------------------------

def one_var_closed_forms(max_n: int = 10) -> Residual:
    t, b = UniPoly.t(), UniPoly.beta()
    tally = Tally("one-var-closed-forms", {"max_n": max_n})
    for n in range(1, max_n + 1):
        jp = t * (t - b) ** (n - 1)
        jq = (2 * t * t - b * t) * (t - b) ** (n - 2) if n >= 2 else 2 * t
        tally.record(genfun_one_var("jp", (n,)) == jp, f"jp_{n}")
        tally.record(genfun_one_var("jq", (n,)) == jq, f"jq_{n}")
    return tally.result(max_n)


def ribbon_closed_forms(max_size: int = 9) -> Residual:
    tally = Tally("ribbon-closed-forms", {"max_size": max_size})
    for Lam in strict_partitions_up_to(max_size):
        if len(Lam) < 1:
            continue
        for Psi in ribbon_partners(Lam):
            if Psi == Lam:
                continue
            for kind in ("jq", "jp"):
                try:
                    ok = genfun_one_var(kind, Lam, Psi) == ribbon_closed_form(kind, Lam, Psi)
                except ArithmeticError:
                    ok = False
                tally.record(ok, f"{kind} {Lam}/{Psi}")
    return tally.result(max_size)


# -- Bender-Knuth ----------------------------------------------------------

def bender_knuth_battery(max_size: int = 8) -> Residual:
    """Every semistandard bar tableau on letters 1, 2 over skew shapes of size <= max_size."""
    tally = Tally("bender-knuth", {"max_size": max_size})
    for lam, mu in skew_shapes(max_size):
        shape = shifted_diagram(lam, mu)
        for T in enumerate_tableaux(shape, "BT_Q", 2):
            where = f"{lam}/{mu} {T.cells}"
            S = bk.swap_all(T)
            tally.record(bk.is_sorted(S) and bk.bar_weight(S) == bk.bar_weight(T), "swap " + where)
            tally.record(bk.unswap_all(S) == T, "roundtrip " + where)
            R = bk.reverse_weight(S)
            tally.record(bk.reverse_weight(R) == S, "reverse-weight involution " + where)
            tally.record(bk.swap_all(bk.unswap_all(R)) == R, "sorted roundtrip " + where)
            U = bk.tau(T, 1)
            tally.record(bk.is_semistandard(U) and U.boxes == T.boxes, "tau shape " + where)
            tally.record(weight_vector(U, 2) == weight_vector(T, 2)[::-1], "tau weight " + where)
            tally.record(diagonal_primes(U) == diagonal_primes(T), "tau diagonal primes " + where)
            tally.record(bk.tau(U, 1) == T, "tau involution " + where)
    return tally.result(max_size)


def tau_locality(max_size: int = 5, letters: int = 3) -> Residual:
    """tau(., k) on larger alphabets: involution, weight swap, locality, family preserved."""
    tally = Tally("tau-letters", {"max_size": max_size, "letters": letters})
    for lam, mu in skew_shapes(max_size):
        shape = shifted_diagram(lam, mu)
        for family in ("BT_P", "BT_Q"):
            for T in enumerate_tableaux(shape, family, letters):
                for k in range(1, letters):
                    U = bk.tau(T, k)
                    w = list(weight_vector(T, letters))
                    w[k - 1], w[k] = w[k], w[k - 1]
                    where = f"k={k} {family} {T.cells}"
                    tally.record(list(weight_vector(U, letters)) == w, "weight " + where)
                    tally.record(bk.tau(U, k) == T, "involution " + where)
                    tally.record(diagonal_primes(U) == diagonal_primes(T), "diagonal " + where)
                    moved = [b for (b, e), (_, f) in zip(T.cells, U.cells)
                             if e != f and not 2 * k - 1 <= e <= 2 * k + 2]
                    tally.record(not moved, "locality " + where)
    return tally.result(max_size)


# -- symmetry and beta = 0 ------------------------------------------------

def symmetry(max_size: int = 7, nvars: int = 4,
             families: Sequence[str] = ("jp", "jq", "GP", "GQ", "gp", "gq")) -> Residual:
    tally = Tally("symmetry", {"max_size": max_size, "vars": nvars})
    for lam, mu in skew_shapes(max_size, 0):
        for fam in families:
            f = genfun(fam, lam, mu, nvars)
            tally.record(is_symmetric(f, nvars), f"{fam} {lam}/{mu}")
    return tally.result(max_size)


def beta_zero(max_size: int = 7, nvars: int = 4) -> Residual:
    parts = [beta_zero_collapse_check(lam, nvars) for lam in strict_partitions_up_to(max_size)]
    return combine("beta-zero", parts, {"max_size": max_size, "vars": nvars})


# -- Pieri and coefficient tables -----------------------------------------

def pieri_oracle(max_size: int = 7) -> Residual:
    tally = Tally("pieri-oracle", {"max_size": max_size})
    for nu in strict_partitions_up_to(max_size):
        for lam in strict_partitions_up_to(size(nu)):
            if not contains(nu, lam):
                continue
            for kind in ("bhat", "chat"):
                for n in range(0, size(nu) + 1):
                    a = pieri_coeff(kind, lam, nu, n)
                    b = pieri_coeff_oracle(kind, lam, nu, n)
                    tally.record(a == b, f"{kind} {lam} {nu} n={n}: {a} vs {b}")
    lam, nu = (5, 4, 1), (8, 5, 3, 1)
    tally.record(ribbon_tableaux_count(nu, lam) == 9, "Q-ribbon count for (8,5,3,1)/(5,4,1)")
    tally.record(pieri_coeff("chat", lam, nu) == 12, "c-ribbon count for (8,5,3,1)/(5,4,1)")
    return tally.result(max_size)


def coefficient_clauses(max_size: int = 9) -> Residual:
    tally = Tally("coefficient-clauses", {"max_size": max_size})
    for Lam in strict_partitions_up_to(max_size):
        if not Lam:
            continue
        for Psi in ribbon_partners(Lam):
            for kind in ("y", "z"):
                bad = table_clauses(kind, Lam, Psi)
                tally.record(not bad, f"{kind} {Lam}/{Psi}: {bad}")
            if len(Lam) >= 2:
                for kind in ("jq", "jp"):
                    tally.record(lemma_difference_check(kind, Lam, Psi), f"difference {kind} {Lam} {Psi}")
    return tally.result(max_size)


# -- products, structure constants, operators -----------------------------

def products(max_size: int = 5, max_n: int = 3, nvars: int = 3) -> Residual:
    parts = []
    for lam in strict_partitions_up_to(max_size):
        if not lam:
            continue
        for n in range(1, max_n + 1):
            for fam in ("jp", "jq"):
                parts.append(one_row_product_check(lam, n, fam, nvars))
    rho, tau = example_shapes()
    for fam in ("jp", "jq"):
        parts.append(shape_product_check(rho, tau, fam, nvars))
    return combine("products", parts, {"max_size": max_size, "max_n": max_n, "vars": nvars})


def structure_duality(cap: int = 5) -> Residual:
    return structure_duality_check(cap)


def operators(size_cap: int = 5, deg_cap: int = 3) -> Residual:
    parts = [operator_check("inverse", size_cap, deg_cap), operator_check("commute", size_cap, deg_cap)]
    return combine("operators", parts, {"size_cap": size_cap, "deg_cap": deg_cap})


# -- driver ---------------------------------------------------------------

def suite_checks(max_size: int = 8, nvars: int = 4) -> dict[str, Callable[[], Residual]]:
    """Named checks; ``max_size`` bounds the sweeps (capped at each check's default scale)."""
    return {
        "cauchy": cauchy_standard,
        "cauchy-dual": cauchy_dual,
        "one-var-closed-forms": one_var_closed_forms,
        "ribbon-closed-forms": lambda: ribbon_closed_forms(min(max_size + 1, 9)),
        "bender-knuth": lambda: bender_knuth_battery(max_size),
        "tau-letters": lambda: tau_locality(min(max_size, 5)),
        "symmetry": lambda: symmetry(min(max_size, 7), nvars),
        "pieri-oracle": lambda: pieri_oracle(min(max_size, 7)),
        "coefficient-clauses": lambda: coefficient_clauses(min(max_size + 1, 9)),
        "products": products,
        "structure-duality": structure_duality,
        "operators": operators,
        "beta-zero": lambda: beta_zero(min(max_size, 7), nvars),
    }


def run_suite(max_size: int = 8, nvars: int = 4, only: Sequence[str] | None = None) -> list[Residual]:
    checks = suite_checks(max_size, nvars)
    if only:
        unknown = [name for name in only if name not in checks]
        if unknown:
            raise ValueError(f"unknown check(s) {unknown}; expected some of {sorted(checks)}")
        checks = {name: checks[name] for name in only}
    return [fn() for fn in checks.values()]
