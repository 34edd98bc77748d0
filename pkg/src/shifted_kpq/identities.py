"""Identity checks and coefficient computations.

Every check here returns exact residuals: a check passes only when the residual
polynomial is identically zero through the stated degree.

Basis expansions use one triangular peeling routine (``expand``).  At the
extreme degree of the remainder, the lexicographically largest monomial of each
alphabet is ``x^lam`` for the partition ``lam`` of the basis element to remove
next, and its coefficient is ``1`` (P-type) or ``2^len(lam)`` (Q-type) times
the wanted coefficient.  This is the classical leading-term structure of Schur
P- and Q-polynomials and it needs at least ``len(lam)`` variables per alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import BetaInt, MultiPoly, cauchy_kernel, solve_in_basis
from .genfun import genfun, genfun_boxes, genfun_one_var, genfun_shape
from .shapes import (SkewShape, StrictPartition, as_shifted, compose_shapes, contains,
                     corner_deletions, max_length, ribbon_base, ribbon_params, ribbon_partners,
                     shifted_diagram,
                     size, strict_partition, strict_partitions_up_to, sub_partitions,
                     unshifted_diagram)
from .tableaux import enumerate_tableaux, weight


# -- reports --------------------------------------------------------------

@dataclass
class Residual:
    """Outcome of an identity check."""

    check: str
    value: MultiPoly
    max_checked_degree: int
    params: dict = field(default_factory=dict)
    status: str = ""
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.value.is_zero() else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "residual_terms": len(self.value),
            "max_checked_degree": self.max_checked_degree,
        }


def combine(check: str, parts: Sequence[Residual], params: dict | None = None) -> Residual:
    """Merge several residuals; any failure fails, otherwise any inconclusive part
    makes the whole inconclusive."""
    total = MultiPoly()
    for p in parts:
        total = total + MultiPoly(dict(p.value.raw_items()))
    statuses = {p.status for p in parts}
    if "fail" in statuses or not total.is_zero():
        status = "fail"
    elif "inconclusive" in statuses or not parts:
        status = "inconclusive"
    else:
        status = "pass"
    deg = max((p.max_checked_degree for p in parts), default=0)
    notes = [n for p in parts for n in p.notes]
    return Residual(check, total, deg, params or {}, status, notes)


# -- Cauchy identities ----------------------------------------------------

def verify_cauchy(kind: str, nx: int, ny: int, maxdeg: int,
                  mu: Iterable[int] = (), nu: Iterable[int] = ()) -> Residual:
    """Residual of a Cauchy identity through total degree ``maxdeg``.

    ``QP``:    sum GQ_lam(x) gp_lam(y)  against  prod (1 - xbar y)/(1 - x y)
    ``PQ``:    sum GP_lam(x) gq_lam(y)  against  the same kernel
    ``skewP``: sum GP_{lam//mu}(x) jq_{lam/nu}(y)  against
               prod (1 + x y)/(1 + xbar y) * sum GP_{nu//k}(x) jq_{mu/k}(y)
    ``skewQ``: the same with GQ and jp.

    Each set-valued factor has minimal x-degree at least ``|lam| - |mu|``, so
    ``lam`` with ``|lam| <= maxdeg + |mu|`` suffice; that bound is re-checked on
    every polynomial that enters the sum.
    """
    mu = strict_partition(mu)
    nu = strict_partition(nu)
    params = {"kind": kind, "nx": nx, "ny": ny, "max_deg": maxdeg,
              "mu": list(mu), "nu": list(nu)}
    notes: list[str] = []
    if kind in ("QP", "PQ"):
        if mu or nu:
            raise ValueError("QP/PQ checks take mu = nu = empty")
        fx, fy = ("GQ", "gp") if kind == "QP" else ("GP", "gq")
        lhs = MultiPoly(trunc=maxdeg)
        for lam in strict_partitions_up_to(maxdeg):
            a = genfun(fx, lam, (), nx, maxdeg)
            if a.is_zero():
                continue
            if a.min_degree() < size(lam):
                notes.append(f"degree bound violated for {fx}{lam}")
            b = genfun(fy, lam, (), ny, maxdeg, alphabet="y")
            lhs = lhs + a * b
        rhs = cauchy_kernel("standard", nx, ny, maxdeg)
    elif kind in ("skewP", "skewQ"):
        fx, fy = ("GPss", "jq") if kind == "skewP" else ("GQss", "jp")
        lhs = MultiPoly(trunc=maxdeg)
        for lam in strict_partitions_up_to(maxdeg + size(mu)):
            if not contains(lam, nu):
                continue
            a = genfun(fx, lam, mu, nx, maxdeg)
            if a.is_zero():
                continue
            if a.min_degree() < size(lam) - size(mu):
                notes.append(f"degree bound violated for {fx}{lam}//{mu}")
            b = genfun(fy, lam, nu, ny, maxdeg, alphabet="y")
            lhs = lhs + a * b
        inner = MultiPoly(trunc=maxdeg)
        for kap in sub_partitions(mu):
            a = genfun(fx, nu, kap, nx, maxdeg)
            b = genfun(fy, mu, kap, ny, maxdeg, alphabet="y")
            inner = inner + a * b
        rhs = cauchy_kernel("dual", nx, ny, maxdeg) * inner
    else:
        raise ValueError(f"unknown Cauchy kind {kind!r}")
    res = (lhs - rhs).truncate(maxdeg)
    status = "fail" if (notes or not res.is_zero()) else "pass"
    return Residual(f"cauchy-{kind}", res, maxdeg, params, status, notes)


# -- triangular basis expansion -------------------------------------------

P_TYPE = {"GP", "gp", "jp"}
Q_TYPE = {"GQ", "gq", "jq"}


@dataclass(frozen=True)
class Factor:
    """One tensor factor of a product basis: a family on ``nvars`` letters of an alphabet."""

    family: str
    alphabet: str
    nvars: int

    def lead(self, lam: StrictPartition) -> int:
        return 1 if self.family in P_TYPE else 2 ** len(lam)


def _leading_key(f: MultiPoly, degree: int, factors: Sequence[Factor]):
    best = None
    for (m, _), _ in f.raw_items():
        if m.degree != degree:
            continue
        exps = dict(m)
        key = tuple(tuple(exps.get((fc.alphabet, i), 0) for i in range(1, fc.nvars + 1))
                    for fc in factors)
        if best is None or key > best:
            best = key
    return best


def expand(f: MultiPoly, factors: Sequence[Factor], direction: str,
           maxdeg: int | None = None) -> dict[tuple[StrictPartition, ...], BetaInt]:
    """Coefficients of ``f`` in the product basis given by ``factors``.

    ``direction='up'`` peels from the lowest degree (K-theoretic families, result
    valid through ``maxdeg``); ``'down'`` peels from the top degree (dual families,
    exact and finite).
    """
    rest = f if maxdeg is None else f.truncate(maxdeg)
    out: dict[tuple[StrictPartition, ...], BetaInt] = {}
    guard = 0
    while not rest.is_zero():
        guard += 1
        if guard > 100000:
            raise RuntimeError("basis expansion did not terminate")
        degree = rest.min_degree() if direction == "up" else rest.max_degree()
        key = _leading_key(rest, degree, factors)
        parts = []
        for exps in key:
            lam = tuple(e for e in exps if e)
            if any(a <= b for a, b in zip(lam, lam[1:])) or list(exps[:len(lam)]) != list(lam):
                raise ArithmeticError(f"leading exponent {exps} is not a strict partition")
            parts.append(lam)
        mono = {}
        for fc, exps in zip(factors, key):
            for i, e in enumerate(exps, 1):
                if e:
                    mono[(fc.alphabet, i)] = e
        c = rest.coeff(mono)
        lead = 1
        for fc, lam in zip(factors, parts):
            lead *= fc.lead(lam)
        c = c.exact_div(lead)
        key_parts = tuple(parts)
        out[key_parts] = out.get(key_parts, BetaInt()) + c
        basis = MultiPoly.const(c, maxdeg)
        for fc, lam in zip(factors, parts):
            basis = basis * genfun(fc.family, lam, (), fc.nvars, maxdeg, alphabet=fc.alphabet)
        rest = rest - basis
    return {k: v for k, v in out.items() if not v.is_zero()}


def _beta_power_coeff(c: BetaInt, exponent: int) -> int:
    """Integer ``a`` with ``c == a * beta**exponent`` (zero allowed)."""
    if c.is_zero():
        return 0
    k, a = c.monomial()
    if k != exponent:
        raise ArithmeticError(f"coefficient {c} is not a multiple of beta^{exponent}")
    return a


# -- Pieri coefficients ---------------------------------------------------

def pieri_coeff(kind: str, lam: Iterable[int], nu: Iterable[int], n: int | None = None) -> int:
    """Ribbon count for a one-row Pieri coefficient.

    Counts set-valued tableaux with entries in ``{1', 1}`` on ``nu/mu`` over all
    ``mu`` obtained from ``lam`` by deleting removable corners, with exactly ``n``
    entries in total (every ``n`` when ``n`` is None).  The count is 0 unless
    ``lam`` is contained in ``nu``.  ``bhat`` forbids primed
    diagonal entries, ``chat`` allows them.
    """
    lam = strict_partition(lam)
    nu = strict_partition(nu)
    fam = {"bhat": "SVT_P", "chat": "SVT_Q"}.get(kind)
    if fam is None:
        raise ValueError(f"unknown Pieri kind {kind!r}")
    if not contains(nu, lam):
        return 0
    total = 0
    for mu in corner_deletions(lam):
        shape = shifted_diagram(nu, mu)
        if not shape.contained:
            continue
        for t in enumerate_tableaux(shape, fam, 1):
            if n is None or weight(t).size == n:
                total += 1
    return total


def ribbon_tableaux_count(nu: Iterable[int], lam: Iterable[int], family: str = "SVT_Q") -> int:
    """Number of ``{1', 1}``-filled set-valued tableaux of shape ``nu/lam``."""
    shape = shifted_diagram(tuple(nu), tuple(lam))
    if not shape.contained:
        return 0
    return sum(1 for _ in enumerate_tableaux(shape, family, 1))


def _pieri_degree_bound(nu: StrictPartition) -> int:
    return 2 * size(nu) + 1


@lru_cache(maxsize=None)
def _pieri_expansion(kind: str, nu: StrictPartition) -> dict:
    k = max(1, len(nu))
    maxdeg = _pieri_degree_bound(nu)
    fam = "GP" if kind == "bhat" else "GQ"
    f = genfun(fam, nu, (), k + 1, maxdeg)
    f = f.map_vars({("x", k + 1): ("y", 1)})
    factors = (Factor(fam, "x", k), Factor("GP", "y", 1))
    return expand(f, factors, "up", maxdeg)


def pieri_coeff_oracle(kind: str, lam: Iterable[int], nu: Iterable[int], n: int) -> int:
    """The same coefficient read off from the generating functions.

    Expands ``GP_nu(x_1..x_k, t)`` (``bhat``) or ``GQ_nu(x_1..x_k, t)`` (``chat``)
    in the basis ``GP_lam(x) t^m`` or ``GQ_lam(x) t^m``.
    """
    lam = strict_partition(lam)
    nu = strict_partition(nu)
    if kind not in ("bhat", "chat"):
        raise ValueError(f"unknown Pieri kind {kind!r}")
    if not contains(nu, lam):
        return 0
    if size(lam) + n > _pieri_degree_bound(nu):
        raise ValueError("requested coefficient lies beyond the expansion degree")
    table = _pieri_expansion(kind, nu)
    c = table.get((lam, (n,) if n else ()), BetaInt())
    return _beta_power_coeff(c, size(lam) + n - size(nu))


# -- expansion tables y and z ---------------------------------------------

def expansion_table(kind: str, Lam: Iterable[int], Psi: Iterable[int]) -> dict[int, Fraction | int]:
    """Coefficients ``y`` (``kind='y'``) or ``z`` (``kind='z'``) of the ribbon ``Lam/Psi``.

    They are defined by
    ``jq_{Lam/Psi}(t) = sum_n y_n beta^(|Lam|-|Psi|-n) jq_n(t)``
    and the analogue with ``jp`` for ``z``.
    """
    Lam = strict_partition(Lam)
    Psi = strict_partition(Psi)
    ribbon_params(Lam, Psi)  # validates the pair
    fam = {"y": "jq", "z": "jp"}.get(kind)
    if fam is None:
        raise ValueError(f"unknown table kind {kind!r}")
    f = genfun_one_var(fam, Lam, Psi)
    sol = solve_in_basis(f, fam + "_n")
    N = size(Lam) - size(Psi)
    out: dict[int, Fraction | int] = {}
    for n, c in sol.items():
        if N - n < 0:
            raise ArithmeticError(f"coefficient at n={n} exceeds |Lam/Psi|")
        k, v = c.monomial()
        if k != N - n:
            raise ArithmeticError(f"coefficient {c} at n={n} is not a multiple of beta^{N - n}")
        out[n] = v
    return out


def table_clauses(kind: str, Lam: Iterable[int], Psi: Iterable[int]) -> list[str]:
    """Return the failed clauses of the closed-form description of ``y`` or ``z``."""
    Lam = strict_partition(Lam)
    Psi = strict_partition(Psi)
    tab = expansion_table(kind, Lam, Psi)
    p = ribbon_params(Lam, Psi)
    N = size(Lam) - size(Psi)
    bad = []
    for n, v in tab.items():
        if Fraction(v).denominator != 1 or v < 0:
            bad.append(f"non-integral or negative coefficient {v} at n={n}")
        if (n == 0 < N) or n > N:
            bad.append(f"(a) nonzero coefficient {v} at n={n}")
    if kind == "y":
        s, m, f = p.scc, p.mcc, p.fb
        b_expect = Fraction(2) ** (s + m - 1)
        c_expect = Fraction(2) ** (s + m - 2) * (2 * s + 3 * m + 2 * f - 3)
    else:
        s, m, f = p.scc_star, p.mcc_star, p.fb_star
        b_expect = Fraction(2) ** (s + m)
        c_expect = Fraction(2) ** (s + m - 1) * (2 * s + 3 * m + 2 * f - 2)
    if N > 0 and tab.get(N, 0) != b_expect:
        bad.append(f"(b) expected {b_expect} at n={N}, got {tab.get(N, 0)}")
    if N - 1 > 0 and tab.get(N - 1, 0) != c_expect:
        bad.append(f"(c) expected {c_expect} at n={N - 1}, got {tab.get(N - 1, 0)}")
    return bad


def lemma_difference(kind: str, Lam: Iterable[int], Psi: Iterable[int]) -> tuple[int, int]:
    """Return ``(observed, expected)`` for the Pieri-minus-table difference.

    With ``n = Lam_1 - Lam_2`` and ``m = Lam_2``: ``jq`` compares
    ``bhat^Psi_{Gamma,(n)} - y^Lam_{Psi,m}``; ``jp`` compares
    ``chat^Psi_{Gamma,(n)} - z^Lam_{Psi,m}``.  The expected value is 1 for
    ``Psi`` in ``{(Lam_1, Lam_3, ...), (Lam_1 - 1, Lam_3, ...)}`` and 0 otherwise.
    """
    Lam = strict_partition(Lam)
    Psi = strict_partition(Psi)
    if len(Lam) < 2:
        raise ValueError("need Lam_2 > 0")
    ribbon_params(Lam, Psi)
    n = Lam[0] - Lam[1]
    m = Lam[1]
    Gam = ribbon_base(Lam)
    if kind == "jq":
        hat = pieri_coeff("bhat", Gam, Psi, n)
        tab = expansion_table("y", Lam, Psi).get(m, 0)
    elif kind == "jp":
        hat = pieri_coeff("chat", Gam, Psi, n)
        tab = expansion_table("z", Lam, Psi).get(m, 0)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    special = {strict_partition((Lam[0],) + Lam[2:]), strict_partition((Lam[0] - 1,) + Lam[2:])}
    return hat - tab, int(Psi in special)


def lemma_difference_check(kind: str, Lam: Iterable[int], Psi: Iterable[int]) -> bool:
    observed, expected = lemma_difference(kind, Lam, Psi)
    return observed == expected


def jq_lemma2_check(kind: str, Lam: Iterable[int], n: int, nvars: int = 3) -> Residual:
    """``jq_{Lam/(n)} = sum_mu y^Lam_{mu,n} beta^(|Lam|-|mu|-n) jq_mu`` (and the jp/z analogue)."""
    Lam = strict_partition(Lam)
    fam, tab = ("jq", "y") if kind == "jq" else ("jp", "z")
    lhs = genfun(fam, Lam, (n,) if n else (), nvars)
    rhs = MultiPoly()
    for mu in ribbon_partners(Lam):
        y = expansion_table(tab, Lam, mu).get(n, 0)
        if y:
            e = size(Lam) - size(mu) - n
            rhs = rhs + genfun(fam, mu, (), nvars) * MultiPoly.const(BetaInt.beta(e, y))
    return Residual(f"lemma2-{kind}", lhs - rhs, max(0, size(Lam)),
                    {"Lam": list(Lam), "n": n, "vars": nvars})


# -- structure constants --------------------------------------------------

_PRODUCT_KINDS = {
    # kind: (left family, right family, basis family, direction)
    "ahat": ("gp", "gp", "gp", "down"),
    "bhat_full": ("gq", "gq", "gq", "down"),
    "chat_full": ("gp", "gq", "gp", "down"),
    "a": ("GP", "GP", "GP", "up"),
    "b": ("GQ", "GQ", "GQ", "up"),
}


@dataclass
class CoeffTable:
    """Integer structure constants keyed by ``nu``; ``partial`` marks a degree cap."""

    kind: str
    lam: StrictPartition
    mu: StrictPartition
    entries: dict
    cap: int | None = None
    partial: bool = False

    def to_json(self) -> dict:
        return {"kind": self.kind, "lambda": list(self.lam), "mu": list(self.mu),
                "cap": self.cap, "partial": self.partial,
                "entries": [{"nu": list(nu), "value": v} for nu, v in sorted(self.entries.items(),
                                                                           key=lambda r: (size(r[0]), r[0]))]}


@lru_cache(maxsize=None)
def structure_constants(kind: str, lam: StrictPartition, mu: StrictPartition, cap: int | None = None) -> CoeffTable:
    """Expand a product of two basis functions back in the basis.

    Hatted kinds multiply dual functions and are exact: every ``nu`` has
    ``|nu| <= |lam| + |mu|``.  Unhatted kinds multiply set-valued functions and
    are only computed for ``|nu| <= cap``.
    """
    lam = strict_partition(lam)
    mu = strict_partition(mu)
    try:
        left, right, basis, direction = _PRODUCT_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown structure constant kind {kind!r}") from None
    d = size(lam) + size(mu)
    if direction == "down":
        nv = max(1, max_length(d))
        f = genfun(left, lam, (), nv) * genfun(right, mu, (), nv)
        table = expand(f, (Factor(basis, "x", nv),), "down")
        entries = {nu: _beta_power_coeff(c, d - size(nu)) for (nu,), c in table.items()}
        return CoeffTable(kind, lam, mu, entries)
    if cap is None or cap < d:
        raise ValueError("unhatted constants need cap >= |lam| + |mu|")
    nv = max(1, max_length(cap))
    f = genfun(left, lam, (), nv, cap) * genfun(right, mu, (), nv, cap)
    table = expand(f, (Factor(basis, "x", nv),), "up", cap)
    entries = {nu: _beta_power_coeff(c, size(nu) - d) for (nu,), c in table.items()}
    return CoeffTable(kind, lam, mu, entries, cap, partial=True)


_COPRODUCT_KINDS = {
    # constant: (expanded family, x factor, y factor, direction)
    "ahat": ("GQ", "GQ", "GQ", "up"),
    "bhat_full": ("GP", "GP", "GP", "up"),
    "chat_full": ("GQ", "GQ", "GP", "up"),
    "a": ("gq", "gq", "gq", "down"),
    "b": ("gp", "gp", "gp", "down"),
}


@lru_cache(maxsize=None)
def coproduct_constants(kind: str, nu: StrictPartition, cap: int) -> dict[tuple[StrictPartition, StrictPartition], int]:
    """Structure constants read from ``f_nu(x, y)`` in the basis ``f_lam(x) g_mu(y)``.

    Hatted kinds come from the set-valued coproducts, valid for ``|lam|+|mu| <= cap``;
    unhatted kinds from the dual coproducts, which are exact.
    """
    nu = strict_partition(nu)
    fam, fx, fy, direction = _COPRODUCT_KINDS[kind]
    k = max(1, max_length(cap))
    maxdeg = cap if direction == "up" else None
    f = genfun(fam, nu, (), 2 * k, maxdeg)
    f = f.map_vars({("x", k + i): ("y", i) for i in range(1, k + 1)})
    table = expand(f, (Factor(fx, "x", k), Factor(fy, "y", k)), direction, maxdeg)
    out = {}
    for (lam, mu), c in table.items():
        e = size(lam) + size(mu) - size(nu)
        out[(lam, mu)] = _beta_power_coeff(c, e if direction == "up" else -e)
    return out


def structure_duality_check(cap: int = 5) -> Residual:
    """Products of dual functions against coproducts of set-valued functions, and back."""
    notes = []
    checked = 0
    for kind in ("ahat", "bhat_full", "chat_full", "a", "b"):
        product_side: dict = {}
        for lam in strict_partitions_up_to(cap):
            for mu in strict_partitions_up_to(cap - size(lam)):
                tab = structure_constants(kind, lam, mu, cap if kind in ("a", "b") else None)
                for nu, v in tab.entries.items():
                    if v:
                        product_side[(lam, mu, nu)] = v
                    hatted = kind not in ("a", "b")
                    if v and hatted and size(nu) > size(lam) + size(mu):
                        notes.append(f"{kind}: nonzero beyond |lam|+|mu| at {lam},{mu},{nu}")
                    if v and not hatted and size(nu) < size(lam) + size(mu):
                        notes.append(f"{kind}: nonzero below |lam|+|mu| at {lam},{mu},{nu}")
        coproduct_side: dict = {}
        for nu in strict_partitions_up_to(cap):
            for (lam, mu), v in coproduct_constants(kind, nu, cap).items():
                if size(lam) + size(mu) <= cap and v:
                    coproduct_side[(lam, mu, nu)] = v
        keys = set(product_side) | set(coproduct_side)
        for key in sorted(keys, key=str):
            checked += 1
            if product_side.get(key, 0) != coproduct_side.get(key, 0):
                notes.append(f"{kind}: {key} product {product_side.get(key, 0)} "
                             f"vs coproduct {coproduct_side.get(key, 0)}")
    status = "fail" if notes else "pass"
    return Residual("structure-duality", MultiPoly(), cap, {"cap": cap, "compared": checked}, status, notes)


# -- product formulas -----------------------------------------------------

def shape_product_check(rho: SkewShape, tau: SkewShape, family: str, nvars: int = 3) -> Residual:
    """``f_rho jq_tau = f_{rho |> tau} + f_{rho <| tau} + beta f_{rho o tau}`` with ``f`` = jp or jq."""
    if family not in ("jp", "jq"):
        raise ValueError("family must be jp or jq")
    lhs = genfun_boxes(family, rho.boxes, nvars) * genfun_shape("jq", as_shifted(tau), nvars)
    rhs = (genfun_shape(family, compose_shapes(rho, tau, "right"), nvars)
           + genfun_shape(family, compose_shapes(rho, tau, "below"), nvars)
           + genfun_shape(family, compose_shapes(rho, tau, "merge"), nvars) * MultiPoly.const(BetaInt.beta()))
    deg = (lhs - rhs).max_degree() or 0
    return Residual(f"product-{family}", lhs - rhs, max(deg, len(rho) + len(tau)),
                    {"rho": rho.to_json(), "tau": tau.to_json(), "vars": nvars})


def one_row_product_check(lam: Iterable[int], n: int, family: str, nvars: int = 3) -> Residual:
    """``f_lam jq_n`` against the three one-row terms, ``f`` = jp or jq."""
    lam = strict_partition(lam)
    if not lam or n < 1:
        raise ValueError("need a nonempty lam and n >= 1")
    l1 = lam[0]
    rest = lam[1:]
    lhs = genfun(family, lam, (), nvars) * genfun("jq", (n,), (), nvars)
    rhs = (genfun(family, (n + l1,) + rest, (), nvars)
           + genfun(family, (n + l1 - 1,) + rest, (), nvars) * MultiPoly.const(BetaInt.beta())
           + genfun(family, (n + l1, l1) + rest, (l1,), nvars))
    return Residual(f"one-row-{family}", lhs - rhs, size(lam) + n,
                    {"lambda": list(lam), "n": n, "vars": nvars})


# -- operators ------------------------------------------------------------

def _one_var(family: str, outer, inner, var, maxdeg) -> MultiPoly:
    return genfun(family, outer, inner, 1, maxdeg, alphabet=var[0], offset=var[1] - 1)


def _negate_var(f: MultiPoly, var) -> MultiPoly:
    out = {}
    for (m, k), c in f.raw_items():
        e = dict(m).get(var, 0)
        out[(m, k)] = c * (-1) ** e
    return MultiPoly(out, f.trunc)


def operator_check(kind: str, size_cap: int, deg_cap: int) -> Residual:
    """Exact operator identities on partitions of size at most ``size_cap``.

    ``inverse``: ``p(-t) p~(t) = p~(t) p(-t) = 1`` and the same for ``q``, in
    t-degree at most ``deg_cap``.
    ``commute``: ``p~(v) Q(u) = K~ Q(u) p~(v)``, ``q~(v) P(u) = K~ P(u) q~(v)``,
    ``p(v) Q(u) = K Q(u) p(v)`` and ``q(v) P(u) = K P(u) q(v)`` with
    ``K = (1 - ubar v)/(1 - u v)`` and ``K~ = (1 + u v)/(1 + ubar v)``, in total
    ``(u, v)``-degree at most ``deg_cap``.  A matrix entry is only compared when
    every term feeding it lies inside the size cap; if nothing can be compared the
    status is ``inconclusive``.
    """
    if size_cap < 1 or deg_cap < 1:
        raise ValueError("caps must be positive")
    parts = []
    params = {"kind": kind, "size_cap": size_cap, "deg_cap": deg_cap}
    parts_up = list(strict_partitions_up_to(size_cap))
    if kind == "inverse":
        t = ("x", 1)
        for dual, tilde in (("gp", "jp"), ("gq", "jq")):
            total = MultiPoly(trunc=deg_cap)
            for lam in parts_up:
                subs = list(sub_partitions(lam))
                for kap in subs:
                    for first, second in ((tilde, dual), (dual, tilde)):
                        acc = MultiPoly(trunc=deg_cap)
                        for mid in subs:
                            if not contains(mid, kap):
                                continue
                            a = _one_var(first, lam, mid, t, deg_cap)
                            b = _one_var(second, mid, kap, t, deg_cap)
                            if first == dual:
                                a = _negate_var(a, t)
                            else:
                                b = _negate_var(b, t)
                            acc = acc + a * b
                        if lam == kap:
                            acc = acc - 1
                        total = total + acc
            parts.append(Residual(f"inverse-{dual}", total, deg_cap))
        return combine("operators-inverse", parts, params)
    if kind != "commute":
        raise ValueError(f"unknown operator check {kind!r}")
    u, v = ("x", 1), ("y", 1)
    cases = (
        ("jp", "GQss", "dual"),
        ("jq", "GPss", "dual"),
        ("gp", "GQss", "standard"),
        ("gq", "GPss", "standard"),
    )
    compared = 0
    for dual, up, kernel_kind in cases:
        kernel = cauchy_kernel(kernel_kind, 1, 1, deg_cap)
        total = MultiPoly(trunc=deg_cap)
        for mu in strict_partitions_up_to(size_cap - deg_cap):
            for nu in parts_up:
                lhs = MultiPoly(trunc=deg_cap)
                for lam in strict_partitions_up_to(size(mu) + deg_cap):
                    if not contains(lam, nu):
                        continue
                    lhs = lhs + _one_var(up, lam, mu, u, deg_cap) * _one_var(dual, lam, nu, v, deg_cap)
                rhs = MultiPoly(trunc=deg_cap)
                for kap in sub_partitions(mu):
                    rhs = rhs + _one_var(up, nu, kap, u, deg_cap) * _one_var(dual, mu, kap, v, deg_cap)
                total = total + (lhs - kernel * rhs)
                compared += 1
        parts.append(Residual(f"commute-{dual}-{up}", total, deg_cap))
    params["entries_compared"] = compared
    if compared == 0:
        return Residual("operators-commute", MultiPoly(), deg_cap, params, "inconclusive")
    return combine("operators-commute", parts, params)


# -- beta = 0 collapse ----------------------------------------------------

def beta_zero_collapse_check(lam: Iterable[int], nvars: int) -> Residual:
    """At beta = 0: gp = jp = GP, gq = jq = GQ, and GQ = 2^len(lam) GP."""
    lam = strict_partition(lam)
    f = {fam: genfun(fam, lam, (), nvars).with_beta_zero() for fam in ("gp", "jp", "GP", "gq", "jq", "GQ")}
    res = (f["gp"] - f["GP"]) + (f["jp"] - f["GP"]) + (f["gq"] - f["GQ"]) + (f["jq"] - f["GQ"]) \
        + (f["GQ"] - f["GP"] * (2 ** len(lam)))
    # keep the pieces separate so cancellations between them cannot hide a failure
    pieces = [f["gp"] - f["GP"], f["jp"] - f["GP"], f["gq"] - f["GQ"], f["jq"] - f["GQ"],
              f["GQ"] - f["GP"] * (2 ** len(lam))]
    status = "pass" if all(p.is_zero() for p in pieces) else "fail"
    return Residual("beta-zero", res, size(lam), {"lambda": list(lam), "vars": nvars}, status)


def gq_gp_one_row_check(n: int, nvars: int) -> Residual:
    """``gq_n = 2 gp_n + [n > 1] beta gp_{n-1}``."""
    lhs = genfun("gq", (n,), (), nvars)
    rhs = genfun("gp", (n,), (), nvars) * 2
    if n > 1:
        rhs = rhs + genfun("gp", (n - 1,), (), nvars) * MultiPoly.const(BetaInt.beta())
    return Residual("gq-gp-one-row", lhs - rhs, n, {"n": n, "vars": nvars})


def chat_ahat_relation_check(lam: Iterable[int], nu: Iterable[int], n: int) -> bool:
    """``chat_{lam,(n)} = 2 ahat_{lam,(n)} + [n > 1] ahat_{lam,(n-1)}`` with ``ahat``
    taken from the product ``gp_lam gp_n``."""
    lam = strict_partition(lam)
    nu = strict_partition(nu)

    def ahat(m: int) -> int:
        return structure_constants("ahat", lam, (m,) if m else ()).entries.get(nu, 0)

    expected = 2 * ahat(n) + (ahat(n - 1) if n > 1 else 0)
    return pieri_coeff("chat", lam, nu, n) == expected


def example_shapes() -> tuple[SkewShape, SkewShape]:
    """``SD_(3,2)`` and the unshifted ``D_(2,2)/(1)``."""
    return shifted_diagram((3, 2)), unshifted_diagram((2, 2), (1,))
