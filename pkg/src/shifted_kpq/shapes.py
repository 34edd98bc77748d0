"""Strict partitions, shifted diagrams and shifted ribbons.

Boxes are ``(row, col)`` pairs in French convention: row 1 is the bottom row,
``(i+1, j)`` sits directly above ``(i, j)`` and ``(i, j+1)`` directly to its
right.  Row ``i`` of the shifted diagram of ``lam`` occupies columns
``i .. i + lam_i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

StrictPartition = tuple[int, ...]
Box = tuple[int, int]


def strict_partition(parts: Iterable[int]) -> StrictPartition:
    """Validate and normalise a strict partition (trailing zeros dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a <= b for a, b in zip(p, p[1:])):
        raise ValueError(f"{list(p)} is not a strict partition")
    return p


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when ``mu`` fits inside ``lam`` part by part."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def shifted_boxes(lam: Sequence[int]) -> frozenset[Box]:
    return frozenset((i, i + j - 1) for i, part in enumerate(lam, 1) for j in range(1, part + 1))


def unshifted_boxes(lam: Sequence[int]) -> frozenset[Box]:
    return frozenset((i, j) for i, part in enumerate(lam, 1) for j in range(1, part + 1))


@dataclass(frozen=True)
class SkewShape:
    """A skew shape ``outer/inner`` together with its box set.

    ``contained`` is False when ``inner`` does not fit in ``outer``; the box set is
    then empty by convention.  Unshifted shapes carry ``shifted=False``.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    shifted: bool = True
    boxes: frozenset[Box] = field(default=frozenset(), compare=False)
    contained: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.shifted:
            outer = strict_partition(self.outer)
            inner = strict_partition(self.inner)
            make = shifted_boxes
        else:
            outer = _partition(self.outer)
            inner = _partition(self.inner)
            make = unshifted_boxes
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        ok = contains(outer, inner)
        object.__setattr__(self, "contained", ok)
        object.__setattr__(self, "boxes", make(outer) - make(inner) if ok else frozenset())

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def diagonal(self) -> frozenset[Box]:
        return frozenset(b for b in self.boxes if b[0] == b[1])

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "shifted": self.shifted}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())), bool(data.get("shifted", True)))

    @classmethod
    def from_boxes(cls, boxes: Iterable[Box]) -> "SkewShape":
        """Recover ``outer/inner`` from a box set that is a shifted skew shape."""
        boxes = frozenset(boxes)
        if not boxes:
            return cls(())
        rows: dict[int, list[int]] = {}
        for i, j in boxes:
            rows.setdefault(i, []).append(j)
        top = max(rows)
        outer = [0] * top
        inner = [0] * top
        for i in range(top, 0, -1):
            if i in rows:
                cols = sorted(rows[i])
                if cols != list(range(cols[0], cols[-1] + 1)) or cols[0] < i:
                    raise ValueError("box set is not a shifted skew shape")
                outer[i - 1] = cols[-1] - i + 1
                inner[i - 1] = cols[0] - i
            else:
                above = outer[i] if i < top else 0
                outer[i - 1] = inner[i - 1] = above + 1
        while inner and inner[-1] == 0:
            inner.pop()
        shape = cls(tuple(outer), tuple(inner))
        if shape.boxes != boxes:
            raise ValueError("box set is not a shifted skew shape")
        return shape


def _partition(parts: Iterable[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{list(p)} is not a partition")
    return p


def shifted_diagram(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(outer), tuple(inner))


def unshifted_diagram(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(outer), tuple(inner), shifted=False)


def is_strict_shape(boxes: frozenset[Box]) -> bool:
    try:
        SkewShape.from_boxes(boxes)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def removable_corners(lam: StrictPartition) -> frozenset[Box]:
    """Boxes whose removal from the shifted diagram leaves a strict partition."""
    lam = strict_partition(lam)
    out = set()
    for i, part in enumerate(lam, 1):
        nxt = lam[i] if i < len(lam) else 0
        if part - 1 > nxt or part == 1:
            out.add((i, i + part - 1))
    return frozenset(out)


def remove_boxes(lam: StrictPartition, boxes: Iterable[Box]) -> StrictPartition:
    parts = list(lam)
    for i, _ in boxes:
        parts[i - 1] -= 1
    return strict_partition(parts)


@lru_cache(maxsize=None)
def corner_deletions(lam: StrictPartition) -> tuple[StrictPartition, ...]:
    """All ``mu`` with ``SD_lam - SD_mu`` a subset of the removable corners of ``lam``."""
    corners = sorted(removable_corners(lam))
    out = []
    for r in range(len(corners) + 1):
        for sub in combinations(corners, r):
            out.append(remove_boxes(lam, sub))
    return tuple(out)


def is_shifted_ribbon(shape: SkewShape) -> bool:
    """No box lies strictly above and strictly right of another box."""
    boxes = sorted(shape.boxes)
    for a, (i1, j1) in enumerate(boxes):
        for i2, j2 in boxes[a + 1:]:
            if (i1 < i2 and j1 < j2) or (i2 < i1 and j2 < j1):
                return False
    return True


def ribbon_base(lam: StrictPartition) -> StrictPartition:
    """``(lam_2, lam_3, ...)``: the smallest ``nu`` making ``lam/nu`` a ribbon."""
    return tuple(lam[1:])


def _check_ribbon_pair(Lam: StrictPartition, Psi: StrictPartition) -> tuple[StrictPartition, StrictPartition]:
    Lam = strict_partition(Lam)
    Psi = strict_partition(Psi)
    if not (contains(Lam, Psi) and contains(Psi, ribbon_base(Lam))):
        raise ValueError(f"need (Lam_2, ...) <= Psi <= Lam, got Lam={Lam}, Psi={Psi}")
    return Lam, Psi


def ribbon_partners(Lam: StrictPartition) -> Iterator[StrictPartition]:
    """All strict ``Psi`` with ``(Lam_2, ...) <= Psi <= Lam``, in a fixed order."""
    Lam = strict_partition(Lam)
    lows = list(ribbon_base(Lam)) + [0]
    for parts in product(*(range(hi, lo - 1, -1) for lo, hi in zip(lows, Lam))):
        try:
            yield strict_partition(parts)
        except ValueError:
            continue


def components(boxes: Iterable[Box]) -> list[frozenset[Box]]:
    """Edge-connected components, ordered by their first box in reading order."""
    todo = set(boxes)
    comps = []
    while todo:
        start = todo.pop()
        comp = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: min(reading_key(b) for b in c))
    return comps


def reading_key(b: Box) -> tuple[int, int]:
    """Sort key for row reading order: top row first, left to right."""
    return (-b[0], b[1])


def forced_boxes(boxes: frozenset[Box]) -> frozenset[Box]:
    out = set()
    for (i, j) in boxes:
        if ((i + 1, j) in boxes and (i + 1, j - 1) in boxes) or \
                ((i, j - 1) in boxes and (i + 1, j - 1) in boxes):
            out.add((i, j))
    return frozenset(out)


def diagonally_forced_boxes(boxes: frozenset[Box]) -> frozenset[Box]:
    out = set()
    for (i, j) in boxes:
        if i == j or (i + 1 == j and (j, j) in boxes):
            out.add((i, j))
    return frozenset(out)


@dataclass(frozen=True)
class RibbonParams:
    scc: int
    mcc: int
    fb: int
    res: int
    scc_star: int
    mcc_star: int
    fb_star: int
    res_star: int


@lru_cache(maxsize=None)
def ribbon_params(Lam: StrictPartition, Psi: StrictPartition) -> RibbonParams:
    """Component, forced-box and residual counts for the ribbon ``Lam/Psi``."""
    Lam, Psi = _check_ribbon_pair(Lam, Psi)
    boxes = shifted_diagram(Lam, Psi).boxes
    n = len(boxes)
    comps = components(boxes)
    scc = sum(1 for c in comps if len(c) == 1)
    mcc = len(comps) - scc
    fb = len(forced_boxes(boxes))
    off = [c for c in comps if not any(i == j for i, j in c)]
    scc_s = sum(1 for c in off if len(c) == 1)
    mcc_s = len(off) - scc_s
    fb_s = len(forced_boxes(boxes) | diagonally_forced_boxes(boxes))
    return RibbonParams(
        scc=scc, mcc=mcc, fb=fb, res=n - scc - 2 * mcc - fb + 2,
        scc_star=scc_s, mcc_star=mcc_s, fb_star=fb_s, res_star=n - scc_s - 2 * mcc_s - fb_s + 1,
    )


@dataclass(frozen=True)
class CornerClasses:
    U: frozenset[Box]
    V: frozenset[Box]
    W: frozenset[Box]
    U_star: frozenset[Box]
    V_star: frozenset[Box]
    W_star: frozenset[Box]


def corner_classes(Lam: StrictPartition, Psi: StrictPartition) -> CornerClasses:
    """Sort the addable corners of ``(Lam_2, ...)`` by how they touch ``Psi/(Lam_2, ...)``."""
    Lam, Psi = _check_ribbon_pair(Lam, Psi)
    Gam = ribbon_base(Lam)
    rib = shifted_diagram(Psi, Gam).boxes
    U, V, W, Us, Vs, Ws = (set() for _ in range(6))
    for (i, j) in removable_corners(Gam) if Gam else ():
        if (i + 1, j + 1) in rib:
            continue
        right = (i, j + 1) in rib
        up = (i + 1, j) in rib
        hits = right + up
        if i == j:
            (U if right else V).add((i, j))
        elif hits == 2:
            U.add((i, j))
        elif hits == 1:
            V.add((i, j))
        else:
            W.add((i, j))
        (Us, Vs, Ws)[2 - hits].add((i, j))
    return CornerClasses(*(frozenset(s) for s in (U, V, W, Us, Vs, Ws)))


def _translate(boxes: Iterable[Box], di: int, dj: int) -> frozenset[Box]:
    return frozenset((i + di, j + dj) for i, j in boxes)


def compose_shapes(rho: SkewShape, tau: SkewShape, op: str) -> SkewShape:
    """Glue a shifted shape ``rho`` to an unshifted shape ``tau``.

    ``right`` puts the bottom-right box of ``rho`` just left of the top-left box of
    ``tau``; ``below`` puts it just above; ``merge`` makes the two boxes coincide.
    """
    if not rho.boxes or not tau.boxes:
        raise ValueError("compose_shapes needs nonempty shapes")
    if not rho.shifted or tau.shifted:
        raise ValueError("rho must be shifted and tau unshifted")
    i = min(a for a, _ in rho.boxes)
    j = max(b for a, b in rho.boxes if a == i)
    k = max(a for a, _ in tau.boxes)
    l = min(b for a, b in tau.boxes if a == k)
    d1 = k - i
    d2 = d1 + j + 1 - l
    if op == "right":
        boxes = _translate(rho.boxes, d1, d1) | _translate(tau.boxes, 0, d2)
    elif op == "below":
        boxes = _translate(rho.boxes, d1 + 1, d1 + 1) | _translate(tau.boxes, 0, d2)
    elif op == "merge":
        boxes = _translate(rho.boxes, d1, d1) | _translate(tau.boxes, 0, d2 - 1)
    else:
        raise ValueError(f"unknown composition {op!r}")
    return SkewShape.from_boxes(boxes)


def composition_offsets(rho: SkewShape, tau: SkewShape) -> tuple[int, int]:
    i = min(a for a, _ in rho.boxes)
    j = max(b for a, b in rho.boxes if a == i)
    k = max(a for a, _ in tau.boxes)
    l = min(b for a, b in tau.boxes if a == k)
    return k - i, k - i + j + 1 - l


def as_shifted(tau: SkewShape) -> SkewShape:
    """The shifted shape ``(nu+delta)/(kappa+delta)`` that translates to ``D_{nu/kappa}``."""
    if tau.shifted:
        return tau
    nu, kappa = tau.outer, tau.inner
    m = len(nu) - 1
    delta = [m - r for r in range(len(nu))]
    outer = tuple(a + d for a, d in zip(nu, delta))
    inner = tuple(a + d for a, d in zip(list(kappa) + [0] * (len(nu) - len(kappa)), delta))
    return SkewShape(outer, tuple(x for x in inner if x))


def strict_partitions_of(n: int) -> list[StrictPartition]:
    """Strict partitions of ``n``, earlier ones having larger parts first."""
    out: list[StrictPartition] = []

    def rec(rest: int, cap: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p - 1, acc + (p,))

    rec(n, n, ())
    return out


def strict_partitions_up_to(max_size: int) -> Iterator[StrictPartition]:
    """All strict partitions of size at most ``max_size``, by size then reverse lex."""
    for n in range(max_size + 1):
        yield from strict_partitions_of(n)


def sub_partitions(lam: StrictPartition) -> Iterator[StrictPartition]:
    """Strict partitions contained in ``lam``."""
    for mu in strict_partitions_up_to(size(lam)):
        if contains(lam, mu):
            yield mu


def max_length(n: int) -> int:
    """Largest length of a strict partition of size at most ``n``."""
    ell = 0
    while (ell + 1) * (ell + 2) // 2 <= n:
        ell += 1
    return ell


def parse_partition(text: str) -> StrictPartition:
    """Parse ``"5,4,1"``; the empty partition is spelled ``-``."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return strict_partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam)) if lam else "-"
