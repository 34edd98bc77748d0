"""Exact arithmetic over Z[beta].

Three value types live here:

* ``BetaInt``: a polynomial in the deformation parameter ``beta``.  Coefficients
  are Python integers, or ``Fraction`` when a value comes out of a basis solve.
* ``MultiPoly``: a polynomial (optionally a total-degree truncated series) in
  variables ``x1, x2, ...`` and ``y1, y2, ...`` with ``BetaInt`` coefficients.
* ``UniPoly``: a polynomial in a single variable ``t`` with coefficients in Q[beta].

Internally a ``MultiPoly`` is a flat dict keyed by ``(Monomial, beta_exponent)``;
this keeps the hot multiplication loop free of nested objects.  Everything is
immutable after construction.
"""

from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Number = Union[int, Fraction]
Var = tuple[str, int]

ALPHABETS = ("x", "y")


def _norm_number(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class BetaInt:
    """An element of Z[beta] (or Q[beta]) stored as ``{exponent: coefficient}``."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | Number | None = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = {0: coeffs}
        clean = {}
        for k, v in coeffs.items():
            if k < 0:
                raise ValueError(f"negative beta exponent {k}")
            if v:
                clean[int(k)] = _norm_number(v)
        self._coeffs = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def beta(cls, k: int = 1, c: Number = 1) -> "BetaInt":
        return cls({k: c})

    @property
    def coeffs(self) -> dict[int, Number]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def monomial(self) -> tuple[int, Number]:
        """Return ``(k, c)`` when the value equals ``c * beta**k``."""
        if len(self._coeffs) != 1:
            raise ValueError(f"{self} is not a single beta power")
        return next(iter(self._coeffs.items()))

    def at_zero(self) -> Number:
        return self._coeffs.get(0, 0)

    @staticmethod
    def _coerce(other) -> "BetaInt":
        if isinstance(other, BetaInt):
            return other
        if isinstance(other, (int, Fraction)):
            return BetaInt(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return BetaInt(out)

    __radd__ = __add__

    def __neg__(self):
        return BetaInt({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Number] = defaultdict(int)
        for a, u in self._coeffs.items():
            for b, v in other._coeffs.items():
                out[a + b] += u * v
        return BetaInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BetaInt(1)
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, d: Number) -> "BetaInt":
        """Divide every coefficient by the integer ``d``; raise if not exact."""
        out = {}
        for k, v in self._coeffs.items():
            q = Fraction(v) / d
            if q.denominator != 1:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            out[k] = int(q)
        return BetaInt(out)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self):
        return f"BetaInt({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in self._coeffs.items():
            if k == 0:
                parts.append(str(v))
            else:
                b = "β" if k == 1 else f"β^{k}"
                if v == 1:
                    parts.append(b)
                elif v == -1:
                    parts.append("-" + b)
                else:
                    parts.append(f"{v}{b}")
        return " + ".join(parts).replace("+ -", "- ")


class Monomial(tuple):
    """A monomial as a sorted tuple of ``((alphabet, index), exponent)`` pairs.

    Subclassing ``tuple`` keeps hashing and equality at C speed.
    """

    __slots__ = ()

    def __new__(cls, exps: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        if isinstance(exps, Mapping):
            items = exps.items()
        else:
            items = exps
        merged: dict[Var, int] = {}
        for var, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                merged[var] = merged.get(var, 0) + e
        return super().__new__(cls, sorted(merged.items()))

    @classmethod
    def parse_var(cls, name: str) -> Var:
        m = re.fullmatch(r"([a-z])(\d+)", name)
        if not m or m.group(1) not in ALPHABETS or int(m.group(2)) < 1:
            raise ValueError(f"bad variable name {name!r}")
        return (m.group(1), int(m.group(2)))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def exps(self) -> dict[Var, int]:
        return dict(self)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        d = dict(self)
        for v, e in other:
            d[v] = d.get(v, 0) + e
        return tuple.__new__(Monomial, sorted(d.items()))

    def name(self) -> str:
        if not self:
            return "1"
        return "*".join(f"{a}{i}" if e == 1 else f"{a}{i}^{e}" for (a, i), e in self)

    def sort_key(self):
        # graded lexicographic: total degree, then (alphabet, index, exponent)
        return (self.degree, tuple(self))


ONE = Monomial()

TermKey = tuple[Monomial, int]


class MultiPoly:
    """Polynomial in x/y variables with Z[beta] coefficients, optionally truncated.

    ``trunc`` is a bound on total x/y degree (beta has degree zero here).  The
    product of two truncated polynomials is truncated at the smaller bound.
    """

    __slots__ = ("_t", "trunc")

    def __init__(self, terms: Mapping[TermKey, Number] | None = None, trunc: int | None = None):
        t: dict[TermKey, Number] = {}
        if terms:
            for key, c in terms.items():
                if c and (trunc is None or key[0].degree <= trunc):
                    t[key] = _norm_number(c)
        self._t = t
        self.trunc = trunc

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, t: dict[TermKey, Number], trunc: int | None) -> "MultiPoly":
        p = cls.__new__(cls)
        p._t = t
        p.trunc = trunc
        return p

    @classmethod
    def const(cls, c: Number | BetaInt = 1, trunc: int | None = None) -> "MultiPoly":
        c = c if isinstance(c, BetaInt) else BetaInt(c)
        return cls({(ONE, k): v for k, v in c.items()}, trunc)

    @classmethod
    def var(cls, name: str | Var, power: int = 1, trunc: int | None = None) -> "MultiPoly":
        v = Monomial.parse_var(name) if isinstance(name, str) else name
        return cls({(Monomial({v: power}), 0): 1}, trunc)

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, BetaInt], trunc: int | None = None) -> "MultiPoly":
        flat = {}
        for m, c in terms.items():
            for k, v in c.items():
                flat[(m, k)] = v
        return cls(flat, trunc)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, BetaInt]:
        grouped: dict[Monomial, dict[int, Number]] = defaultdict(dict)
        for (m, k), c in self._t.items():
            grouped[m][k] = c
        return {m: BetaInt(d) for m, d in grouped.items()}

    def raw_items(self):
        """Iterate over ``((monomial, beta_exponent), coefficient)``."""
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def coeff(self, m: Monomial | Mapping[Var, int]) -> BetaInt:
        m = m if isinstance(m, Monomial) else Monomial(m)
        return BetaInt({k: c for (mm, k), c in self._t.items() if mm == m})

    def degrees(self) -> set[int]:
        return {m.degree for (m, _) in self._t}

    def min_degree(self) -> int | None:
        return min((m.degree for (m, _) in self._t), default=None)

    def max_degree(self) -> int | None:
        return max((m.degree for (m, _) in self._t), default=None)

    def variables(self) -> set[Var]:
        return {v for (m, _) in self._t for v, _ in m}

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _min_trunc(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, BetaInt)):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = self._min_trunc(self.trunc, other.trunc)
        out = dict(self._t)
        for key, c in other._t.items():
            out[key] = out.get(key, 0) + c
        return MultiPoly(out, trunc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._t.items()}, self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = self._min_trunc(self.trunc, other.trunc)
        out: dict[TermKey, Number] = defaultdict(int)
        right = [(m, m.degree, k, c) for (m, k), c in other._t.items()]
        for (m1, k1), c1 in self._t.items():
            d1 = m1.degree
            for m2, d2, k2, c2 in right:
                if trunc is not None and d1 + d2 > trunc:
                    continue
                out[(m1 * m2, k1 + k2)] += c1 * c2
        return MultiPoly(out, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.const(1, self.trunc)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Number | BetaInt) -> "MultiPoly":
        return self * MultiPoly.const(c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- transformations ---------------------------------------------
    def truncate(self, d: int | None) -> "MultiPoly":
        trunc = self._min_trunc(self.trunc, d)
        return MultiPoly(self._t, trunc)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly({k: c for k, c in self._t.items() if k[0].degree == d})

    def map_vars(self, mapping: Mapping[Var, Var | None]) -> "MultiPoly":
        """Rename variables; a variable mapped to ``None`` is set to zero."""
        out: dict[TermKey, Number] = defaultdict(int)
        for (m, k), c in self._t.items():
            new = []
            dead = False
            for v, e in m:
                w = mapping.get(v, v)
                if w is None:
                    dead = True
                    break
                new.append((w, e))
            if not dead:
                out[(Monomial(new), k)] += c
        return MultiPoly(out, self.trunc)

    def with_beta_zero(self) -> "MultiPoly":
        return MultiPoly({key: c for key, c in self._t.items() if key[1] == 0}, self.trunc)

    def beta_layer(self, k: int) -> "MultiPoly":
        return MultiPoly({(m, 0): c for (m, kk), c in self._t.items() if kk == k}, self.trunc)

    # -- output -------------------------------------------------------
    def sorted_items(self) -> list[tuple[Monomial, int, Number]]:
        return sorted(((m, k, c) for (m, k), c in self._t.items()),
                      key=lambda r: (r[0].sort_key(), r[1]))

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for m, k, c in self.sorted_items():
            factors = []
            if k:
                factors.append("β" if k == 1 else f"β^{k}")
            if m:
                factors.append(m.name())
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        s = " + ".join(parts).replace("+ -", "- ")
        if self.trunc is not None:
            s += f" + O(deg {self.trunc + 1})"
        return s

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"beta": k, "exps": {f"{a}{i}": e for (a, i), e in m}, "coef": str(c)}
                for m, k, c in self.sorted_items()
            ],
            "trunc": self.trunc,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        out: dict[TermKey, Number] = defaultdict(int)
        for term in data["terms"]:
            m = Monomial({Monomial.parse_var(n): int(e) for n, e in term["exps"].items()})
            coef = Fraction(term["coef"])
            out[(m, int(term["beta"]))] += coef
        return cls(out, data.get("trunc"))


def ring_op(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Apply ``add``, ``sub`` or ``mul`` to two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def xvar(i: int, trunc: int | None = None) -> MultiPoly:
    return MultiPoly.var(("x", i), trunc=trunc)


def yvar(i: int, trunc: int | None = None) -> MultiPoly:
    return MultiPoly.var(("y", i), trunc=trunc)


def beta_poly(k: int = 1) -> MultiPoly:
    return MultiPoly.const(BetaInt.beta(k))


def bar_expand(var: str | Var, maxdeg: int) -> MultiPoly:
    """Series of ``-x/(1 + beta x)`` through degree ``maxdeg``."""
    if maxdeg < 1:
        raise ValueError("maxdeg must be at least 1")
    v = Monomial.parse_var(var) if isinstance(var, str) else var
    terms = {}
    for d in range(1, maxdeg + 1):
        terms[(Monomial({v: d}), d - 1)] = (-1) ** d
    return MultiPoly(terms, maxdeg)


def geometric(p: MultiPoly, maxdeg: int) -> MultiPoly:
    """``1/(1 - p)`` for ``p`` without constant term, truncated at ``maxdeg``."""
    p = p.truncate(maxdeg)
    if p.min_degree() == 0:
        raise ValueError("geometric series needs a positive-degree argument")
    out = MultiPoly.const(1, maxdeg)
    power = MultiPoly.const(1, maxdeg)
    for _ in range(maxdeg):
        power = power * p
        if power.is_zero():
            break
        out = out + power
    return out


def cauchy_kernel(kind: str, nx: int, ny: int, maxdeg: int) -> MultiPoly:
    """Truncated Cauchy kernel in ``x1..x_nx`` and ``y1..y_ny``.

    ``standard`` is the product of ``(1 - xbar_i y_j)/(1 - x_i y_j)``,
    ``dual`` is the product of ``(1 + x_i y_j)/(1 + xbar_i y_j)``,
    where ``xbar = -x/(1 + beta x)``.
    """
    if nx < 1 or ny < 1 or maxdeg < 0:
        raise ValueError("need nx, ny >= 1 and maxdeg >= 0")
    if kind not in ("standard", "dual"):
        raise ValueError(f"unknown kernel kind {kind!r}")
    out = MultiPoly.const(1, maxdeg)
    if maxdeg < 2:
        return out
    for i in range(1, nx + 1):
        xb = bar_expand(("x", i), maxdeg)
        x = xvar(i, maxdeg)
        for j in range(1, ny + 1):
            y = yvar(j, maxdeg)
            if kind == "standard":
                factor = (1 - xb * y) * geometric(x * y, maxdeg)
            else:
                factor = (1 + x * y) * geometric(-(xb * y), maxdeg)
            out = out * factor
    return out


def beta_specialize(f: MultiPoly, value: str = "zero") -> MultiPoly:
    """``value='zero'`` drops every term with a positive power of beta."""
    if value == "zero":
        return f.with_beta_zero()
    if value == "keep":
        return f
    raise ValueError(f"unknown specialization {value!r}")


class UniPoly:
    """Polynomial in ``t`` with exact Q[beta] coefficients, keyed by ``(t_exp, beta_exp)``."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int], Number] | None = None):
        self._t = {k: _norm_number(Fraction(c)) for k, c in (terms or {}).items() if c}

    @classmethod
    def t(cls, power: int = 1) -> "UniPoly":
        return cls({(power, 0): 1})

    @classmethod
    def const(cls, c: Number | BetaInt) -> "UniPoly":
        c = c if isinstance(c, BetaInt) else BetaInt(c)
        return cls({(0, k): v for k, v in c.items()})

    @classmethod
    def beta(cls, k: int = 1) -> "UniPoly":
        return cls({(0, k): 1})

    @classmethod
    def from_multipoly(cls, f: MultiPoly, var: Var = ("x", 1)) -> "UniPoly":
        out: dict[tuple[int, int], Number] = defaultdict(int)
        for (m, k), c in f.raw_items():
            e = dict(m)
            if set(e) - {var}:
                raise ValueError("polynomial involves more than one variable")
            out[(e.get(var, 0), k)] += c
        return cls(out)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        return max((d for d, _ in self._t), default=-1)

    def coeff(self, d: int) -> BetaInt:
        return BetaInt({k: c for (dd, k), c in self._t.items() if dd == d})

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, BetaInt)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for key, c in other._t.items():
            out[key] = out.get(key, 0) + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Number] = defaultdict(int)
        for (d1, k1), c1 in self._t.items():
            for (d2, k2), c2 in other._t.items():
                out[(d1 + d2, k1 + k2)] += c1 * c2
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for (d, k), c in sorted(self._t.items(), key=lambda r: (-r[0][0], r[0][1])):
            f = []
            if k:
                f.append("β" if k == 1 else f"β^{k}")
            if d:
                f.append("t" if d == 1 else f"t^{d}")
            body = "*".join(f)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({self})"


T = UniPoly.t()
BETA = UniPoly.beta()


def jp_basis(n: int) -> UniPoly:
    """``t (t - beta)^(n-1)`` for ``n >= 1`` and ``1`` for ``n = 0``."""
    if n == 0:
        return UniPoly.const(1)
    return T * (T - BETA) ** (n - 1)


def jq_basis(n: int) -> UniPoly:
    """``(2t^2 - beta t)(t - beta)^(n-2)`` for ``n >= 2``; ``2t`` and ``1`` below."""
    if n == 0:
        return UniPoly.const(1)
    if n == 1:
        return 2 * T
    return (2 * T * T - BETA * T) * (T - BETA) ** (n - 2)


_BASES = {"jp_n": jp_basis, "jq_n": jq_basis, "jp": jp_basis, "jq": jq_basis}


def solve_in_basis(f: UniPoly, basis: str) -> dict[int, BetaInt]:
    """Write ``f`` as a Q[beta]-combination of ``jp_n(t)`` or ``jq_n(t)``.

    Elimination runs from the top t-degree down; both bases are triangular with
    ``basis_n`` of t-degree exactly ``n``.
    """
    try:
        make = _BASES[basis]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}") from None
    rest = f
    out: dict[int, BetaInt] = {}
    for n in range(f.degree(), -1, -1):
        lead = rest.coeff(n)
        if lead.is_zero():
            continue
        b = make(n)
        b_lead = b.coeff(n).monomial()[1]
        c = BetaInt({k: Fraction(v) / b_lead for k, v in lead.items()})
        out[n] = c
        rest = rest - b * UniPoly.const(c)
    if not rest.is_zero():
        raise ArithmeticError(f"{f} is not representable in the {basis} basis")
    return dict(sorted(out.items()))


def iter_monomials(f: MultiPoly) -> Iterator[Monomial]:
    seen = set()
    for (m, _), _ in f.raw_items():
        if m not in seen:
            seen.add(m)
            yield m
