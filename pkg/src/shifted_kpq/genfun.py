"""Generating polynomials of the tableau families in finitely many variables.

=========  ==============================  =================================
family     tableaux                        coefficient of ``x^T``
=========  ==============================  =================================
GP / GQ    set-valued (P / Q)              ``beta^(|T| - |lam/mu|)``
GPss/GQss  set-valued on ``lam/nu`` for    ``beta^(|T| - |lam/mu|)``
           ``nu`` = ``mu`` minus corners
gp / gq    plane partitions (P / Q)        ``(-beta)^(|lam/mu| - |wt|)``
jp / jq    bar tableaux (P / Q)            ``(-beta)^(|lam/mu| - #bars)``
=========  ==============================  =================================

With ``n`` variables only entries ``1', 1, ..., n', n`` occur, so each family is
a finite sum.  Sums are computed by a transfer-matrix pass over the boxes in
build order: the state is the tuple of values that later boxes still look at,
and identical states are merged, which is far cheaper than listing tableaux.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable

from .algebra import BetaInt, Monomial, MultiPoly, UniPoly, Var
from .shapes import (Box, SkewShape, StrictPartition, contains, corner_deletions, ribbon_params,
                     shifted_diagram, size, strict_partition)
from .tableaux import box_plan, local_choices

FAMILY_RULES = {
    "GP": ("SVT", "P"), "GQ": ("SVT", "Q"),
    "GPss": ("SVT", "P"), "GQss": ("SVT", "Q"),
    "gp": ("PP", "P"), "gq": ("PP", "Q"),
    "jp": ("BT", "P"), "jq": ("BT", "Q"),
}


def _check_family(family: str) -> tuple[str, str]:
    try:
        return FAMILY_RULES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILY_RULES)}") from None


@lru_cache(maxsize=4096)
def weight_counts(boxes: frozenset[Box], kind: str, pq: str, nletters: int,
                  max_deg: int | None = None) -> dict[tuple[int, ...], int]:
    """Number of fillings of ``boxes`` per exponent vector of ``x_1..x_n``.

    Only fillings whose size statistic (which equals the total degree) is at most
    ``max_deg`` are counted.
    """
    plan = box_plan(boxes)
    n = len(plan.order)
    base = 2 * n + 2
    shift = base ** nletters
    letter_code = [0] + [base ** (v - 1) + shift for v in range(1, nletters + 1)]
    memo: dict = {}

    choice_codes: dict = {}

    def options(left, below, diag):
        key = (left, below, diag)
        opts = choice_codes.get(key)
        if opts is None:
            opts = []
            for ch in local_choices(kind, pq, nletters, left, below, diag):
                code = sum(letter_code[v] * c for v, c in ch.contrib)
                opts.append((ch.carry, code, ch.deg))
            choice_codes[key] = opts
        return opts

    min_rest = kind == "SVT"

    def rec(k: int, state: tuple, budget):
        if k == n:
            return {0: 1}
        if budget is not None and min_rest and budget < n - k:
            return {}
        key = (k, state, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        lp, bp = plan.left_pos[k], plan.below_pos[k]
        left = state[lp] if lp >= 0 else None
        below = state[bp] if bp >= 0 else None
        gather = plan.gather[k]
        out: dict[int, int] = defaultdict(int)
        for carry, code, deg in options(left, below, plan.diag[k]):
            if budget is not None and deg > budget:
                continue
            ext = state + (carry,)
            sub = rec(k + 1, tuple(ext[g] for g in gather), None if budget is None else budget - deg)
            for c2, mult in sub.items():
                out[code + c2] += mult
        out = dict(out)
        memo[key] = out
        return out

    raw = rec(0, (), max_deg)
    result = {}
    for code, mult in raw.items():
        code %= shift
        exps = []
        for _ in range(nletters):
            exps.append(code % base)
            code //= base
        result[tuple(exps)] = result.get(tuple(exps), 0) + mult
    return result


def _letters(nvars: int, alphabet: str, offset: int) -> list[Var]:
    return [(alphabet, offset + i) for i in range(1, nvars + 1)]


@lru_cache(maxsize=4096)
def genfun_boxes(family: str, boxes: frozenset[Box], nvars: int, maxdeg: int | None = None,
                 alphabet: str = "x", offset: int = 0) -> MultiPoly:
    """Generating polynomial of ``family`` on an arbitrary shifted box set."""
    kind, pq = _check_family(family)
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    counts = weight_counts(boxes, kind, pq, nvars, maxdeg)
    names = _letters(nvars, alphabet, offset)
    nbox = len(boxes)
    terms = {}
    for exps, mult in counts.items():
        deg = sum(exps)
        mono = Monomial(zip(names, exps))
        if kind == "SVT":
            terms[(mono, deg - nbox)] = mult
        else:
            k = nbox - deg
            terms[(mono, k)] = mult * (-1) ** k
    return MultiPoly(terms, maxdeg)


def genfun(family: str, outer: Iterable[int], inner: Iterable[int] = (), nvars: int = 1,
           maxdeg: int | None = None, alphabet: str = "x", offset: int = 0) -> MultiPoly:
    """Generating polynomial of ``family`` for the skew shape ``outer/inner``.

    ``maxdeg`` truncates at a total degree; without it the result is exact.
    ``alphabet``/``offset`` choose variable names, e.g. ``y3, y4`` for
    ``alphabet="y", offset=2, nvars=2``.  Returns 0 when ``inner`` does not fit.
    """
    _check_family(family)
    outer = strict_partition(outer)
    inner = strict_partition(inner)
    if family in ("GPss", "GQss"):
        base = family[:2]
        total = MultiPoly(trunc=maxdeg)
        if not contains(outer, inner):
            return total
        for nu in corner_deletions(inner):
            shape = shifted_diagram(outer, nu)
            if not shape.contained:
                continue
            part = genfun_boxes(base, shape.boxes, nvars, maxdeg, alphabet, offset)
            total = total + part * MultiPoly.const(BetaInt.beta(size(inner) - size(nu)))
        return total
    shape = shifted_diagram(outer, inner)
    if not shape.contained:
        return MultiPoly(trunc=maxdeg)
    return genfun_boxes(family, shape.boxes, nvars, maxdeg, alphabet, offset)


def genfun_shape(family: str, shape: SkewShape, nvars: int, maxdeg: int | None = None) -> MultiPoly:
    """Generating polynomial on a shape object; unshifted shapes are used as box sets."""
    if family in ("GPss", "GQss"):
        return genfun(family, shape.outer, shape.inner, nvars, maxdeg)
    return genfun_boxes(family, shape.boxes, nvars, maxdeg)


def to_t(f: MultiPoly) -> UniPoly:
    return UniPoly.from_multipoly(f, ("x", 1))


def genfun_one_var(family: str, outer: Iterable[int], inner: Iterable[int] = ()) -> UniPoly:
    """``genfun(family, outer, inner, 1)`` as a polynomial in ``t``."""
    return to_t(genfun(family, outer, inner, 1))


def ribbon_closed_form(kind: str, Lam: StrictPartition, Psi: StrictPartition) -> UniPoly:
    """Product formula for the one-variable bar tableau function of a ribbon.

    ``jq``: ``2^scc t^(scc+mcc+fb) (2t - beta)^mcc (t - beta)^(res-2)``
    ``jp``: ``2^scc* t^(scc*+mcc*+fb*) (2t - beta)^mcc* (t - beta)^(res*-1)``
    """
    p = ribbon_params(strict_partition(Lam), strict_partition(Psi))
    t = UniPoly.t()
    b = UniPoly.beta()
    if kind == "jq":
        s, m, f, r = p.scc, p.mcc, p.fb, p.res - 2
    elif kind == "jp":
        s, m, f, r = p.scc_star, p.mcc_star, p.fb_star, p.res_star - 1
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if r < 0:
        raise ArithmeticError(f"negative residual for {Lam}/{Psi}")
    return (2 ** s) * t ** (s + m + f) * (2 * t - b) ** m * (t - b) ** r


def transpose_vars(f: MultiPoly, a: Var, b: Var) -> MultiPoly:
    return f.map_vars({a: b, b: a})


def is_symmetric(f: MultiPoly, nvars: int, alphabet: str = "x") -> bool:
    """Invariance under every adjacent transposition of ``x_1..x_nvars``."""
    extra = {v for v in f.variables() if v[0] == alphabet and v[1] > nvars}
    if extra:
        raise ValueError(f"polynomial uses variables beyond {alphabet}{nvars}")
    for i in range(1, nvars):
        if transpose_vars(f, (alphabet, i), (alphabet, i + 1)) != f:
            return False
    return True


def set_last_var_zero(f: MultiPoly, nvars: int, alphabet: str = "x") -> MultiPoly:
    return f.map_vars({(alphabet, nvars): None})
