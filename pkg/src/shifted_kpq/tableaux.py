"""Set-valued tableaux, plane partitions and bar tableaux on shifted skew shapes.

Entries are encoded as integers that respect the order 1' < 1 < 2' < 2 < ...:
``v'`` is ``2v - 1`` and ``v`` is ``2v``.  Odd codes are primed.

Fillings are built box by box, bottom row first and left to right inside a row,
so that the left and lower neighbours of a box are always known when it is
filled.  ``local_choices`` is the single source of truth for which contents a
box may take given those two neighbours; both the tableau enumerator here and
the generating-function engine in ``genfun`` are driven by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .shapes import Box, SkewShape

FAMILIES = ("SVT_P", "SVT_Q", "PP_P", "PP_Q", "BT_P", "BT_Q")


# -- entries --------------------------------------------------------------

def entry(value: int, primed: bool = False) -> int:
    if value < 1:
        raise ValueError("entry values start at 1")
    return 2 * value - 1 if primed else 2 * value


def is_primed(e: int) -> bool:
    return e % 2 == 1


def letter(e: int) -> int:
    """The underlying value ``v`` of ``v`` or ``v'``."""
    return (e + 1) // 2


def entry_str(e: int) -> str:
    return f"{letter(e)}'" if is_primed(e) else str(letter(e))


def parse_entry(text: str) -> int:
    text = text.strip()
    if text.endswith("'"):
        return entry(int(text[:-1]), True)
    return entry(int(text))


def reading_order(boxes: Iterable[Box]) -> list[Box]:
    """Build order: bottom row first, left to right."""
    return sorted(boxes)


# -- tableau types --------------------------------------------------------

class Weight(NamedTuple):
    """Monomial exponents ``{letter: exponent}`` together with the size statistic."""

    exps: dict
    size: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(self.exps.get(i, 0) for i in range(1, n + 1))


@dataclass(frozen=True)
class SetValuedTableau:
    shape: SkewShape
    cells: tuple[tuple[Box, tuple[int, ...]], ...]

    @classmethod
    def make(cls, shape: SkewShape, cells: Mapping[Box, Iterable[int]]) -> "SetValuedTableau":
        return cls(shape, tuple(sorted((b, tuple(sorted(set(v)))) for b, v in cells.items())))

    @property
    def cell_map(self) -> dict[Box, tuple[int, ...]]:
        return dict(self.cells)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(),
                "cells": {f"{i},{j}": [entry_str(e) for e in v] for (i, j), v in self.cells}}


@dataclass(frozen=True)
class PlanePartition:
    shape: SkewShape
    cells: tuple[tuple[Box, int], ...]

    @classmethod
    def make(cls, shape: SkewShape, cells: Mapping[Box, int]) -> "PlanePartition":
        return cls(shape, tuple(sorted(cells.items())))

    @property
    def cell_map(self) -> dict[Box, int]:
        return dict(self.cells)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(),
                "cells": {f"{i},{j}": [entry_str(e)] for (i, j), e in self.cells}}


@dataclass(frozen=True)
class BarTableau:
    """A filling together with a partition of its boxes into bars.

    Each bar is stored as a sorted tuple of boxes; the bars themselves are sorted.
    Equality compares the filling and the bar partition.
    """

    shape: SkewShape
    cells: tuple[tuple[Box, int], ...]
    bars: tuple[tuple[Box, ...], ...]

    @classmethod
    def make(cls, shape: SkewShape | None, cells: Mapping[Box, int],
             bars: Iterable[Iterable[Box]]) -> "BarTableau":
        if shape is None:
            shape = SkewShape.from_boxes(cells)
        bars = tuple(sorted(tuple(sorted(b)) for b in bars if b))
        return cls(shape, tuple(sorted(cells.items())), bars)

    @property
    def cell_map(self) -> dict[Box, int]:
        return dict(self.cells)

    @property
    def boxes(self) -> frozenset[Box]:
        return frozenset(b for b, _ in self.cells)

    def bar_of(self, box: Box) -> tuple[Box, ...]:
        for bar in self.bars:
            if box in bar:
                return bar
        raise KeyError(box)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(),
                "cells": {f"{i},{j}": [entry_str(e)] for (i, j), e in self.cells},
                "bars": [[list(b) for b in bar] for bar in self.bars]}

    def pretty(self) -> str:
        return render_bars(self.cell_map, self.bars)


Tableau = SetValuedTableau | PlanePartition | BarTableau


def _cells_from_json(data: Mapping) -> dict[Box, list[int]]:
    out = {}
    for key, vals in data["cells"].items():
        i, j = (int(x) for x in key.split(","))
        out[(i, j)] = [parse_entry(v) for v in vals]
    return out


def tableau_from_json(data: Mapping, kind: str | None = None) -> Tableau:
    """Parse tableau JSON; bar tableaux are recognised by the ``bars`` key."""
    cells = _cells_from_json(data)
    shape = SkewShape.from_json(data["shape"]) if "shape" in data else SkewShape.from_boxes(cells)
    if kind is None:
        kind = "BT" if "bars" in data else "SVT"
    if kind == "BT":
        bars = [[tuple(b) for b in bar] for bar in data["bars"]]
        return BarTableau.make(shape, {b: v[0] for b, v in cells.items()}, bars)
    if kind == "PP":
        return PlanePartition.make(shape, {b: v[0] for b, v in cells.items()})
    return SetValuedTableau.make(shape, cells)


def render_bars(cells: Mapping[Box, int], bars: Sequence[Sequence[Box]]) -> str:
    """Plain-text picture, top row first.

    ``|`` before an entry starts a new bar within the row; ``^`` after an entry
    means the box continues the bar of the box below it.
    """
    if not cells:
        return "(empty)"
    bar_id = {}
    for n, bar in enumerate(bars):
        for b in bar:
            bar_id[b] = n
    rows = sorted({i for i, _ in cells}, reverse=True)
    cmin = min(j for _, j in cells)
    cmax = max(j for _, j in cells)
    lines = []
    for i in rows:
        parts = []
        for j in range(cmin, cmax + 1):
            b = (i, j)
            if b not in cells:
                parts.append("    ")
                continue
            sep = " " if (i, j - 1) in cells and bar_id.get((i, j - 1)) == bar_id.get(b) else "|"
            mark = "^" if (i - 1, j) in cells and bar_id.get((i - 1, j)) == bar_id.get(b) else " "
            parts.append(f"{sep}{entry_str(cells[b]):>2}{mark}")
        lines.append("".join(parts).rstrip())
    return "\n".join(lines)


# -- local rules ----------------------------------------------------------

class Choice(NamedTuple):
    carry: int          # value seen by the box above and the box to the right
    payload: object     # what is stored in the box (set, entry, or (entry, bar link))
    contrib: tuple      # ((letter, increment), ...) to the monomial
    deg: int            # increment of the size statistic


@lru_cache(maxsize=None)
def _subsets_from(m: int, top: int) -> tuple[tuple[int, ...], ...]:
    rest = range(m + 1, top + 1)
    out = []
    for r in range(len(rest) + 1):
        for sub in combinations(rest, r):
            out.append((m,) + sub)
    return tuple(out)


@lru_cache(maxsize=None)
def local_choices(kind: str, family: str, nletters: int,
                  left: int | None, below: int | None, diag: bool) -> tuple[Choice, ...]:
    """Legal contents of a box given the carried values of its left/lower neighbours."""
    top = 2 * nletters
    lo = max(left or 1, below or 1)
    out: list[Choice] = []
    for e in range(lo, top + 1):
        primed = e % 2 == 1
        if kind == "SVT":
            if e == left and primed:
                continue
            if e == below and not primed:
                continue
            for s in _subsets_from(e, top):
                if diag and family == "P" and any(x % 2 for x in s):
                    continue
                counts: dict[int, int] = {}
                for x in s:
                    counts[letter(x)] = counts.get(letter(x), 0) + 1
                out.append(Choice(s[-1], s, tuple(sorted(counts.items())), len(s)))
        elif kind == "PP":
            if diag and family == "P" and not primed:
                continue
            new = (e != left) if primed else (e != below)
            contrib = ((letter(e), 1),) if new else ()
            out.append(Choice(e, e, contrib, int(new)))
        elif kind == "BT":
            if primed and e == left:
                continue
            if not primed and e == below:
                continue
            if diag and family == "P" and primed:
                continue
            join = "L" if (not primed and e == left) else ("B" if (primed and e == below) else None)
            out.append(Choice(e, (e, "N"), ((letter(e), 1),), 1))
            if join:
                out.append(Choice(e, (e, join), (), 0))
        else:
            raise ValueError(f"unknown filling kind {kind!r}")
    return tuple(out)


def split_family(family: str) -> tuple[str, str]:
    kind, _, pq = family.partition("_")
    if kind not in ("SVT", "PP", "BT") or pq not in ("P", "Q"):
        raise ValueError(f"unknown family {family!r}")
    return kind, pq


class BoxPlan:
    """Precomputed bookkeeping for filling a box set in build order.

    ``active[k]`` lists the already-filled boxes that some later box still needs
    (as a left or lower neighbour) just before box ``k`` is filled.
    """

    def __init__(self, boxes: Iterable[Box]):
        order = reading_order(boxes)
        self.order = order
        index = {b: k for k, b in enumerate(order)}
        n = len(order)
        active: list[list[Box]] = []
        for k in range(n + 1):
            keep = []
            for b in order[:k]:
                i, j = b
                for nb in ((i + 1, j), (i, j + 1)):
                    if index.get(nb, -1) >= k:
                        keep.append(b)
                        break
            active.append(keep)
        self.active = active
        self.left_pos: list[int] = []
        self.below_pos: list[int] = []
        self.gather: list[tuple[int, ...]] = []
        self.diag: list[bool] = []
        for k, (i, j) in enumerate(order):
            pos = {b: p for p, b in enumerate(active[k])}
            self.left_pos.append(pos.get((i, j - 1), -1))
            self.below_pos.append(pos.get((i - 1, j), -1))
            self.diag.append(i == j)
            ext = {b: p for p, b in enumerate(active[k])}
            ext[(i, j)] = len(active[k])
            self.gather.append(tuple(ext[b] for b in active[k + 1]))


@lru_cache(maxsize=256)
def box_plan(boxes: frozenset[Box]) -> BoxPlan:
    return BoxPlan(boxes)


def _raw_fillings(boxes: frozenset[Box], kind: str, pq: str, nletters: int,
                  max_size: int | None = None) -> Iterator[list]:
    plan = box_plan(boxes)
    n = len(plan.order)
    payloads: list = [None] * n

    def rec(k: int, state: tuple, budget: int | None):
        if k == n:
            yield list(payloads)
            return
        lp, bp = plan.left_pos[k], plan.below_pos[k]
        left = state[lp] if lp >= 0 else None
        below = state[bp] if bp >= 0 else None
        for ch in local_choices(kind, pq, nletters, left, below, plan.diag[k]):
            if budget is not None and ch.deg > budget:
                continue
            ext = state + (ch.carry,)
            payloads[k] = ch.payload
            yield from rec(k + 1, tuple(ext[g] for g in plan.gather[k]),
                           None if budget is None else budget - ch.deg)

    yield from rec(0, (), max_size)


def _bars_from_links(order: Sequence[Box], links: Sequence[str]) -> list[list[Box]]:
    bar_of: dict[Box, int] = {}
    bars: list[list[Box]] = []
    for (i, j), link in zip(order, links):
        if link == "L":
            idx = bar_of[(i, j - 1)]
        elif link == "B":
            idx = bar_of[(i - 1, j)]
        else:
            idx = len(bars)
            bars.append([])
        bars[idx].append((i, j))
        bar_of[(i, j)] = idx
    return bars


def enumerate_tableaux(shape: SkewShape, family: str, max_value: int) -> Iterator[Tableau]:
    """Every valid filling of ``shape`` in ``family`` with entries at most ``max_value``.

    The stream is deterministic: lexicographic in the box contents read in build
    order, with the bar choices of a bar tableau varying fastest.
    """
    if max_value < 1:
        raise ValueError("max_value must be at least 1")
    kind, pq = split_family(family)
    order = reading_order(shape.boxes)
    for payloads in _raw_fillings(shape.boxes, kind, pq, max_value):
        if kind == "SVT":
            yield SetValuedTableau(shape, tuple(zip(order, payloads)))
        elif kind == "PP":
            yield PlanePartition(shape, tuple(zip(order, payloads)))
        else:
            cells = {b: p[0] for b, p in zip(order, payloads)}
            bars = _bars_from_links(order, [p[1] for p in payloads])
            yield BarTableau.make(shape, cells, bars)


# -- validation and weights ----------------------------------------------

def _neighbour_pairs(boxes: frozenset[Box]) -> Iterator[tuple[Box, Box, str]]:
    for (i, j) in sorted(boxes):
        if (i, j + 1) in boxes:
            yield (i, j), (i, j + 1), "row"
        if (i + 1, j) in boxes:
            yield (i, j), (i + 1, j), "column"


def _lines(boxes: frozenset[Box]) -> Iterator[tuple[str, list[Box]]]:
    rows: dict[int, list[Box]] = {}
    cols: dict[int, list[Box]] = {}
    for b in sorted(boxes):
        rows.setdefault(b[0], []).append(b)
        cols.setdefault(b[1], []).append(b)
    for r in sorted(rows):
        yield "row", rows[r]
    for c in sorted(cols):
        yield "column", cols[c]


def validate(tableau: Tableau, family: str = "Q") -> list[str]:
    """Return the violated conditions (empty when the tableau is valid).

    ``family`` is ``"P"`` or ``"Q"``.  Validation never raises on bad input.
    """
    problems: list[str] = []
    if family not in ("P", "Q"):
        return [f"unknown family {family!r}"]
    cells = tableau.cell_map
    boxes = frozenset(cells)
    if boxes != tableau.shape.boxes:
        problems.append("cells do not match the shape")
    if isinstance(tableau, SetValuedTableau):
        for b, s in cells.items():
            if not s:
                problems.append(f"S1: empty set at {b}")
        for a, b, _ in _neighbour_pairs(boxes):
            if cells[a] and cells[b] and max(cells[a]) > min(cells[b]):
                problems.append(f"S2: max at {a} exceeds min at {b}")
        for line, bs in _lines(boxes):
            seen: dict[int, Box] = {}
            for b in bs:
                for e in cells[b]:
                    bad = (line == "column" and not is_primed(e)) or (line == "row" and is_primed(e))
                    if bad and e in seen and seen[e] != b:
                        tag = "S3" if line == "column" else "S4"
                        problems.append(f"{tag}: {entry_str(e)} repeated at {seen[e]} and {b}")
                    seen.setdefault(e, b)
        if family == "P":
            for b, s in cells.items():
                if b[0] == b[1] and any(is_primed(e) for e in s):
                    problems.append(f"P: primed entry on the diagonal at {b}")
        return problems
    for a, b, _ in _neighbour_pairs(boxes):
        if cells[a] > cells[b]:
            problems.append(f"order: {a} exceeds {b}")
    if isinstance(tableau, PlanePartition):
        if family == "P":
            for b, e in cells.items():
                if b[0] == b[1] and not is_primed(e):
                    problems.append(f"P: unprimed entry on the diagonal at {b}")
        return problems
    # bar tableau
    for line, bs in _lines(boxes):
        seen2: dict[int, Box] = {}
        for b in bs:
            e = cells[b]
            bad = (line == "column" and not is_primed(e)) or (line == "row" and is_primed(e))
            if bad and e in seen2:
                problems.append(f"repeat: {entry_str(e)} at {seen2[e]} and {b} in one {line}")
            seen2.setdefault(e, b)
    covered: dict[Box, int] = {}
    for n, bar in enumerate(tableau.bars):
        for b in bar:
            if b in covered:
                problems.append(f"bars: {b} lies in two bars")
            covered[b] = n
        if not all(b in cells for b in bar):
            problems.append(f"bars: bar {bar} leaves the shape")
            continue
        values = {cells[b] for b in bar}
        if len(values) != 1:
            problems.append(f"bars: bar {bar} mixes entries")
        rows = {b[0] for b in bar}
        cols = {b[1] for b in bar}
        if len(rows) == 1:
            js = sorted(cols)
            contiguous = js == list(range(js[0], js[-1] + 1))
        elif len(cols) == 1:
            is_ = sorted(rows)
            contiguous = is_ == list(range(is_[0], is_[-1] + 1))
        else:
            contiguous = False
        if not contiguous:
            problems.append(f"bars: bar {bar} is not a contiguous line")
    if set(covered) != set(boxes):
        problems.append("bars: bars do not cover the shape")
    if family == "P":
        for b, e in cells.items():
            if b[0] == b[1] and is_primed(e):
                problems.append(f"P: primed entry on the diagonal at {b}")
    return problems


def is_valid(tableau: Tableau, family: str = "Q") -> bool:
    return not validate(tableau, family)


def weight(tableau: Tableau) -> Weight:
    """Monomial and size statistic of a valid tableau."""
    if validate(tableau, "Q"):
        raise ValueError("weight of an invalid tableau")
    exps: dict[int, int] = {}
    cells = tableau.cell_map
    if isinstance(tableau, SetValuedTableau):
        for s in cells.values():
            for e in s:
                exps[letter(e)] = exps.get(letter(e), 0) + 1
        return Weight(exps, sum(len(s) for s in cells.values()))
    if isinstance(tableau, PlanePartition):
        cols: set[tuple[int, int]] = set()
        rows: set[tuple[int, int]] = set()
        for (i, j), e in cells.items():
            if is_primed(e):
                rows.add((letter(e), i))
            else:
                cols.add((letter(e), j))
        for v, _ in cols:
            exps[v] = exps.get(v, 0) + 1
        for v, _ in rows:
            exps[v] = exps.get(v, 0) + 1
        return Weight(exps, len(cols) + len(rows))
    for bar in tableau.bars:
        v = letter(cells[bar[0]])
        exps[v] = exps.get(v, 0) + 1
    return Weight(exps, len(tableau.bars))


def weight_vector(tableau: Tableau, n: int) -> tuple[int, ...]:
    return weight(tableau).vector(n)


def diagonal_primes(tableau: BarTableau) -> int:
    return sum(1 for (i, j), e in tableau.cells if i == j and is_primed(e))
