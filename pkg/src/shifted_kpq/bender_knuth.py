"""Bender-Knuth type involutions on shifted bar tableaux.

All operations here work on bar tableaux whose entries lie in ``{1', 1, 2', 2}``
(encoded ``1, 2, 3, 4``), except ``tau`` which restricts an arbitrary
semistandard bar tableau to two adjacent letters first.  The weight of such a
tableau is the pair ``(a1, a2)`` counting the bars that contain ``1``/``1'`` and
``2``/``2'``.

The involution is the composite ``unswap_all . reverse_weight . swap_all``:

* ``swap_all`` moves every ``2'`` bar past every ``1`` bar, turning a
  semistandard tableau into a *sorted* one, whose rows and columns increase in
  the order ``1' < 2' < 1 < 2`` apart from two exceptional diagonal layouts;
* ``reverse_weight`` splits the bars of a sorted tableau into groups and
  exchanges the two letters group by group;
* ``unswap_all`` is the inverse of ``swap_all``.

A bar is referred to by the sorted tuple of its boxes (a ``BarRef``).  Boxes use
French coordinates: ``(i, j)`` is row ``i`` from the bottom and column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from .shapes import Box, SkewShape
from .tableaux import BarTableau, entry_str, is_primed, letter, validate

ONE_P, ONE, TWO_P, TWO = 1, 2, 3, 4
# position of each entry in the sorted order 1' < 2' < 1 < 2
SORTED_RANK = {ONE_P: 0, TWO_P: 1, ONE: 2, TWO: 3}

BarRef = tuple[Box, ...]
GroupKind = Literal["one_row", "one_column", "two_row", "two_column"]


@dataclass(frozen=True)
class Group:
    kind: GroupKind
    bars: tuple[BarRef, ...]
    boxes: frozenset[Box]

    def to_json(self) -> dict:
        return {"kind": self.kind, "bars": [[list(b) for b in bar] for bar in self.bars]}


# -- mutable working copy -------------------------------------------------

class _Work:
    """Cells and bars of a tableau under modification."""

    def __init__(self, cells: dict[Box, int], bars: Iterable[Iterable[Box]]):
        self.cells = dict(cells)
        self.bars: list[frozenset[Box]] = [frozenset(b) for b in bars]

    @classmethod
    def of(cls, t: BarTableau) -> "_Work":
        return cls(t.cell_map, t.bars)

    def freeze(self, shape: SkewShape | None = None) -> BarTableau:
        return BarTableau.make(shape, self.cells, self.bars)

    def bar_of(self, box: Box) -> frozenset[Box]:
        for bar in self.bars:
            if box in bar:
                return bar
        raise KeyError(box)

    def replace(self, old: Iterable[frozenset[Box]], new: Iterable[Iterable[Box]]) -> None:
        old = set(old)
        self.bars = [b for b in self.bars if b not in old] + [frozenset(b) for b in new if b]

    def set_bar(self, bar: Iterable[Box], value: int) -> None:
        for b in bar:
            self.cells[b] = value

    def value(self, bar: frozenset[Box]) -> int:
        return self.cells[next(iter(bar))]

    def conjugate(self, n: int) -> "_Work":
        def f(b: Box) -> Box:
            return (n - b[1], n - b[0])
        return _Work({f(b): 5 - e for b, e in self.cells.items()},
                     [{f(b) for b in bar} for bar in self.bars])


def _check_alphabet(t: BarTableau) -> None:
    for b, e in t.cells:
        if not 1 <= e <= 4:
            raise ValueError(f"entry {entry_str(e)} at {b} is outside {{1', 1, 2', 2}}")


def _structural_problems(t: BarTableau) -> list[str]:
    """Bar-tableau conditions other than the ordering of entries."""
    return [p for p in validate(t, "Q") if not p.startswith("order")]


def bar_weight(t: BarTableau) -> tuple[int, int]:
    """``(a1, a2)``: the numbers of bars holding ``1``/``1'`` and ``2``/``2'``."""
    cells = t.cell_map
    counts = [0, 0]
    for bar in t.bars:
        counts[letter(cells[bar[0]]) - 1] += 1
    return counts[0], counts[1]


def is_semistandard(t: BarTableau) -> bool:
    return not validate(t, "Q")


def _neighbours(boxes: frozenset[Box]):
    for (i, j) in boxes:
        if (i, j + 1) in boxes:
            yield (i, j), (i, j + 1)
        if (i + 1, j) in boxes:
            yield (i, j), (i + 1, j)


def _weakly_sorted(cells: dict[Box, int]) -> bool:
    boxes = frozenset(cells)
    return all(SORTED_RANK[cells[a]] <= SORTED_RANK[cells[b]] for a, b in _neighbours(boxes))


def diagonal_boxes(boxes: Iterable[Box]) -> list[Box]:
    return sorted(b for b in boxes if b[0] == b[1])


def _two_diagonal(boxes: Iterable[Box]) -> int | None:
    """Row ``i`` when the diagonal boxes are exactly ``(i, i)`` and ``(i+1, i+1)``."""
    d = diagonal_boxes(boxes)
    if len(d) == 2 and d[1][0] == d[0][0] + 1:
        return d[0][0]
    return None


def is_sorted(t: BarTableau) -> bool:
    """Sortedness: rows and columns increase in ``1' < 2' < 1 < 2``, or one of the
    two diagonal exceptions holds."""
    _check_alphabet(t)
    if _structural_problems(t):
        return False
    cells = t.cell_map
    if _weakly_sorted(cells):
        return True
    i = _two_diagonal(cells)
    if i is None:
        return False
    a, ab, b = (i, i), (i, i + 1), (i + 1, i + 1)
    w = _Work.of(t)
    if cells[ab] == ONE and cells[b] == TWO_P:
        if cells[a] == TWO_P or (cells[a] == ONE and w.bar_of(a) == w.bar_of(ab)):
            changed = dict(cells)
            changed[b] = TWO
            return _weakly_sorted(changed) and not _structural_problems(
                BarTableau.make(t.shape, changed, t.bars))
    if cells[a] == ONE and cells[ab] == TWO_P:
        if cells[b] == ONE or (cells[b] == TWO_P and w.bar_of(b) == w.bar_of(ab)):
            changed = dict(cells)
            changed[a] = ONE_P
            return _weakly_sorted(changed) and not _structural_problems(
                BarTableau.make(t.shape, changed, t.bars))
    return False


# -- ascending and descending swaps ---------------------------------------

def _swap(w: _Work, v: frozenset[Box], h: frozenset[Box]) -> tuple[frozenset[Box], bool]:
    """Swap the ``2'`` bar ``v`` with the ``1`` bar ``h``; returns the new ``v``."""
    first_h, last_h = min(h), max(h)
    first_v, last_v = min(v), max(v)
    i, j = first_h
    if first_v == (i + 1, j) and w.cells.get((i, j - 1)) != TWO_P:
        if len(h) > 1:
            nh, nv = h - {first_h}, v | {first_h}
        else:
            nv = frozenset((r - 1, c) for r, c in v)
            nh = frozenset({last_v})
    elif last_v == (last_h[0], last_h[1] + 1) and w.cells.get((last_h[0] + 1, last_h[1] + 1)) != ONE:
        if len(v) > 1:
            nv, nh = v - {last_v}, h | {last_v}
        else:
            nh = frozenset((r, c + 1) for r, c in h)
            nv = frozenset({first_h})
    else:
        return v, False
    w.replace([v, h], [nv, nh])
    w.set_bar(nv, TWO_P)
    w.set_bar(nh, ONE)
    return frozenset(nv), True


def _unswap(w: _Work, v: frozenset[Box], h: frozenset[Box]) -> tuple[frozenset[Box], bool]:
    """Inverse move of ``_swap`` on the ``2'`` bar ``v`` and the ``1`` bar ``h``."""
    first_h, last_h = min(h), max(h)
    first_v, last_v = min(v), max(v)
    if first_h == (first_v[0], first_v[1] + 1):
        if len(v) > 1:
            nv, nh = v - {first_v}, h | {first_v}
        else:
            nh = frozenset((r, c - 1) for r, c in h)
            nv = frozenset({last_h})
    elif last_h == (last_v[0] + 1, last_v[1]):
        if len(h) > 1:
            nh, nv = h - {last_h}, v | {last_h}
        else:
            nv = frozenset((r + 1, c) for r, c in v)
            nh = frozenset({first_v})
    else:
        return v, False
    w.replace([v, h], [nv, nh])
    w.set_bar(nv, TWO_P)
    w.set_bar(nh, ONE)
    return frozenset(nv), True


def _bars_with(w: _Work, value: int) -> list[frozenset[Box]]:
    return [b for b in w.bars if w.value(b) == value]


def _ones_right_to_left(w: _Work) -> list[frozenset[Box]]:
    return sorted(_bars_with(w, ONE), key=lambda b: -min(c for _, c in b))


def _primes_bottom_to_top(w: _Work) -> list[frozenset[Box]]:
    return sorted(_bars_with(w, TWO_P), key=lambda b: min(r for r, _ in b))


def _step(t: BarTableau, v: BarRef, h: BarRef, move: Callable) -> tuple[BarTableau, BarRef]:
    _check_alphabet(t)
    w = _Work.of(t)
    vs, hs = frozenset(v), frozenset(h)
    if vs not in w.bars or hs not in w.bars:
        raise ValueError("both bars must belong to the tableau")
    if w.value(vs) != TWO_P or w.value(hs) != ONE:
        raise ValueError("the first bar must hold 2' and the second 1")
    nv, _ = move(w, vs, hs)
    return w.freeze(t.shape), tuple(sorted(nv))


def swap_step(t: BarTableau, v: BarRef, h: BarRef) -> tuple[BarTableau, BarRef]:
    """One ascending swap of the ``2'`` bar ``v`` with the ``1`` bar ``h``."""
    return _step(t, v, h, _swap)


def unswap_step(t: BarTableau, v: BarRef, h: BarRef) -> tuple[BarTableau, BarRef]:
    """One descending swap of the ``2'`` bar ``v`` with the ``1`` bar ``h``."""
    return _step(t, v, h, _unswap)


def swap_all(t: BarTableau, trace: list | None = None) -> BarTableau:
    """Move every ``2'`` bar (bottom to top) past every ``1`` bar (right to left).

    With ``trace`` given, each intermediate tableau that differs from its
    predecessor is appended to it.
    """
    _check_alphabet(t)
    if not is_semistandard(t):
        raise ValueError("swap_all needs a semistandard bar tableau")
    w = _Work.of(t)
    for v in _primes_bottom_to_top(w):
        for h in _ones_right_to_left(w):
            v, changed = _swap(w, v, h)
            if changed and trace is not None:
                trace.append(w.freeze(t.shape))
    return w.freeze(t.shape)


def unswap_all(t: BarTableau, trace: list | None = None) -> BarTableau:
    """Inverse of ``swap_all`` on sorted tableaux."""
    _check_alphabet(t)
    if not is_sorted(t):
        raise ValueError("unswap_all needs a sorted bar tableau")
    w = _Work.of(t)
    for v in reversed(_primes_bottom_to_top(w)):
        for h in reversed(_ones_right_to_left(w)):
            v, changed = _unswap(w, v, h)
            if changed and trace is not None:
                trace.append(w.freeze(t.shape))
    return w.freeze(t.shape)


# -- conjugation ----------------------------------------------------------

def default_bound(boxes: Iterable[Box]) -> int:
    return 1 + max((max(b) for b in boxes), default=0)


def conjugate(t: BarTableau, n: int | None = None) -> BarTableau:
    """Reflect ``(i, j) -> (n - j, n - i)`` and exchange ``1' <-> 2`` and ``1 <-> 2'``."""
    _check_alphabet(t)
    bound = default_bound(t.boxes)
    if n is None:
        n = bound
    elif n < bound:
        raise ValueError(f"n must be at least {bound}")
    w = _Work.of(t).conjugate(n)
    return w.freeze(SkewShape.from_boxes(w.cells))


# -- groups ---------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            out.setdefault(self.find(a), []).append(a)
        return list(out.values())


def _groups(w: _Work) -> list[Group]:
    bars = sorted(w.bars, key=lambda b: sorted(b))
    n = len(bars)
    primed = [is_primed(w.value(b)) for b in bars]
    rows = [{r for r, _ in b} for b in bars]
    cols = [{c for _, c in b} for b in bars]
    uf = _UnionFind(n)
    for a in range(n):
        for b in range(a + 1, n):
            if primed[a] == primed[b]:
                shared = rows[a] & rows[b] if primed[a] else cols[a] & cols[b]
                if shared:
                    uf.union(a, b)
    i = _two_diagonal(w.cells)
    if i is not None:
        middle = next(k for k in range(n) if (i, i + 1) in bars[k])
        for d in ((i, i), (i + 1, i + 1)):
            k = next(k for k in range(n) if d in bars[k])
            if len(bars[k]) == 1:
                uf.union(k, middle)
    groups: list[Group] = []
    singles: list[int] = []
    for cls in uf.classes():
        if len(cls) == 1:
            singles.append(cls[0])
            continue
        boxes = frozenset().union(*(bars[k] for k in cls))
        off = {is_primed(w.cells[b]) for b in boxes if b[0] != b[1]}
        if len(off) != 1:
            raise AssertionError("internal: mixed group off the diagonal")
        kind = "two_column" if off.pop() else "two_row"
        lines = {b[1] for b in boxes} if kind == "two_column" else {b[0] for b in boxes}
        if len(lines) > 2:
            raise AssertionError("internal: two-line group spans more than two lines")
        groups.append(Group(kind, tuple(tuple(sorted(bars[k])) for k in sorted(cls)), boxes))

    uf2 = _UnionFind(len(singles))
    for x in range(len(singles)):
        for y in range(x + 1, len(singles)):
            a, b = bars[singles[x]], bars[singles[y]]
            pa, pb = primed[singles[x]], primed[singles[y]]
            for (r1, c1) in a:
                hit = False
                for (r2, c2) in b:
                    if abs(r1 - r2) + abs(c1 - c2) != 1:
                        continue
                    same_row = r1 == r2
                    diag_single = (len(a) == 1 and r1 == c1) or (len(b) == 1 and r2 == c2)
                    if (not pa and not pb and same_row) or (pa and pb and not same_row) or diag_single:
                        hit = True
                        break
                if hit:
                    uf2.union(x, y)
                    break
    for cls in uf2.classes():
        members = [singles[k] for k in cls]
        boxes = frozenset().union(*(bars[k] for k in members))
        if len(members) == 1 and len(boxes) == 1:
            kind = "one_column" if primed[members[0]] else "one_row"
        elif len({r for r, _ in boxes}) == 1:
            kind = "one_row"
        elif len({c for _, c in boxes}) == 1:
            kind = "one_column"
        else:
            raise AssertionError("internal: one-line group fits in neither one row nor one column")
        groups.append(Group(kind, tuple(tuple(sorted(bars[k])) for k in sorted(members)), boxes))
    groups.sort(key=lambda g: (min(g.boxes), g.kind))
    return groups


def classify_groups(t: BarTableau) -> list[Group]:
    """Partition the bars of a sorted tableau into one/two-row/column groups."""
    if not is_sorted(t):
        raise ValueError("groups are defined for sorted bar tableaux")
    return _groups(_Work.of(t))


# -- local transformations ------------------------------------------------

def _group_bars(w: _Work, boxes: frozenset[Box]) -> list[frozenset[Box]]:
    return [b for b in w.bars if b <= boxes]


def _toggle_labels_row(w: _Work, boxes: frozenset[Box]) -> None:
    bars = _group_bars(w, boxes)
    diag = [b for b in bars if len(b) == 1 and next(iter(b))[0] == next(iter(b))[1]]
    reprime = None
    for b in bars:
        for box in b:
            if box[0] == box[1] and is_primed(w.cells[box]):
                if len(b) != 1:
                    raise AssertionError("internal: primed diagonal bar with several boxes")
                reprime = b
                w.set_bar(b, w.cells[box] + 1)
    p = sum(1 for b in bars if w.value(b) == ONE)
    q = sum(1 for b in bars if w.value(b) == TWO)
    order = sorted(bars, key=lambda b: min(c for _, c in b))
    last = [b for b in diag if w.value(b) == TWO]
    if last:
        order = [b for b in order if b != last[0]] + last
    for k, b in enumerate(order):
        w.set_bar(b, ONE if k < q else TWO)
    if reprime is not None:
        w.set_bar(reprime, w.value(reprime) - 1)
    assert len(order) == p + q


def _divisions(w: _Work, row: list[Box]) -> set[int]:
    return {a[1] for a, b in zip(row, row[1:]) if w.bar_of(a) != w.bar_of(b)}


def _toggle_divisions_row(w: _Work, boxes: frozenset[Box], keep: int | None = None,
                          hold: int | None = None) -> None:
    """Exchange the bar divisions of the two rows of a two-row group.

    With ``keep = i`` the boxes ``(i, i)`` and ``(i, i+1)`` stay together exactly
    when they were together before.  With ``hold = j`` the division state between
    columns ``j`` and ``j+1`` is left unchanged in both rows.
    """
    rows = sorted({r for r, _ in boxes})
    if len(rows) == 1:
        rows = [rows[0], rows[0] + 1]
    lo, hi = rows
    line = {r: sorted(b for b in boxes if b[0] == r) for r in rows}
    old = {r: _divisions(w, line[r]) for r in rows}
    new = {lo: set(old[hi]), hi: set(old[lo])}
    if keep is not None:
        new[lo].discard(keep)
        if keep in old[lo]:
            new[lo].add(keep)
    if hold is not None:
        for r in rows:
            new[r].discard(hold)
            if hold in old[r]:
                new[r].add(hold)
    fresh = []
    for r in rows:
        run: list[Box] = []
        for box in line[r]:
            if run and (box[1] != run[-1][1] + 1 or run[-1][1] in new[r]):
                fresh.append(run)
                run = []
            run.append(box)
        if run:
            fresh.append(run)
    w.replace(_group_bars(w, boxes), fresh)


def _split_off(w: _Work, box: Box, value: int) -> None:
    bar = w.bar_of(box)
    w.replace([bar], [bar - {box}, {box}])
    w.cells[box] = value


def _merge(w: _Work, box: Box, into: Box, value: int) -> None:
    a, b = w.bar_of(box), w.bar_of(into)
    w.cells[box] = value
    w.replace([a, b], [a | b])


def _diagonal_row_group(w: _Work, boxes: frozenset[Box], i: int) -> str:
    """Weight reversal on a two-row group holding ``(i, i)`` and ``(i+1, i+1)``."""
    a, ab, b = (i, i), (i, i + 1), (i + 1, i + 1)
    c, d = (i, i + 2), (i + 1, i + 2)

    def alone(x: Box) -> bool:
        return len(w.bar_of(x)) == 1

    def together(x: Box, y: Box) -> bool:
        return x in boxes and y in boxes and w.bar_of(x) == w.bar_of(y)

    ca, cb = w.cells[a], w.cells[b]
    if alone(a) and ca in (ONE, TWO_P) and cb == TWO:
        _toggle_divisions_row(w, boxes, keep=i)
        w.cells[a] = TWO_P if ca == ONE else ONE
        return "R1"
    if alone(a) and ca == ONE_P and together(ab, c) and d in boxes and alone(b):
        _toggle_divisions_row(w, boxes, keep=i, hold=i + 1)
        return "R2a"
    if alone(a) and ca == ONE_P and together(ab, c) and d in boxes:
        _merge(w, a, ab, ONE)
        _toggle_divisions_row(w, boxes, keep=i)
        _split_off(w, b, TWO_P)
        return "R2"
    if alone(b) and cb == TWO_P and together(a, ab) and d in boxes:
        _merge(w, b, d, TWO)
        _toggle_divisions_row(w, boxes, keep=i)
        _split_off(w, a, ONE_P)
        return "R3"
    if alone(a) and ca == ONE_P:
        _toggle_divisions_row(w, boxes, keep=i)
        if not alone(b):
            raise AssertionError("internal: (i+1, i+1) not a single box in case R4")
        w.cells[a] = TWO_P
        w.cells[b] = TWO_P
        return "R4"
    if alone(a) and alone(b) and ca == TWO_P and cb == TWO_P:
        w.cells[a] = ONE_P
        w.cells[b] = TWO
        _toggle_divisions_row(w, boxes, keep=i)
        return "R5"
    _toggle_divisions_row(w, boxes, keep=i)
    return "R6"


_COLUMN_CASE = {f"R{k}": f"C{k}" for k in (1, 2, "2a", 3, 4, 5, 6)}


def _on_conjugate(w: _Work, boxes: frozenset[Box], op: Callable[[_Work, frozenset[Box]], object]):
    n = default_bound(w.cells)
    cw = w.conjugate(n)
    cboxes = frozenset((n - j, n - i) for i, j in boxes)
    result = op(cw, cboxes)
    back = cw.conjugate(n)
    w.cells, w.bars = back.cells, back.bars
    return result


def _reverse_weight(t: BarTableau, cases: list | None = None) -> BarTableau:
    w = _Work.of(t)
    groups = _groups(w)
    i = _two_diagonal(w.cells)
    diagonal_group = None
    for g in groups:
        if i is not None and (i, i) in g.boxes and (i + 1, i + 1) in g.boxes:
            diagonal_group = g
            continue
        if g.kind == "one_row":
            _toggle_labels_row(w, g.boxes)
        elif g.kind == "one_column":
            _on_conjugate(w, g.boxes, _toggle_labels_row)
        elif g.kind == "two_row":
            _toggle_divisions_row(w, g.boxes)
        else:
            _on_conjugate(w, g.boxes, _toggle_divisions_row)
    if diagonal_group is not None:
        if diagonal_group.kind == "two_row":
            case = _diagonal_row_group(w, diagonal_group.boxes, i)
        elif diagonal_group.kind == "two_column":
            n = default_bound(w.cells)
            case = _COLUMN_CASE[_on_conjugate(
                w, diagonal_group.boxes, lambda cw, cb: _diagonal_row_group(cw, cb, n - i - 1))]
        else:
            raise AssertionError("internal: both diagonal boxes in a one-line group")
        if cases is not None:
            cases.append(case)
    out = w.freeze(t.shape)
    if _structural_problems(out):
        raise AssertionError(f"internal: weight reversal produced an invalid tableau: {_structural_problems(out)}")
    return out


def reverse_weight(t: BarTableau, cases: list | None = None) -> BarTableau:
    """Weight-reversing involution on sorted tableaux.

    Labels are toggled on one-line groups and bar divisions on two-line groups;
    the group holding two diagonal boxes (if any) follows one of the cases
    R1-R6, or C1-C6 for column groups, whose name is appended to ``cases``.
    """
    _check_alphabet(t)
    if not is_sorted(t):
        raise ValueError("reverse_weight needs a sorted bar tableau")
    return _reverse_weight(t, cases)


# -- the involution on arbitrary adjacent letters -------------------------

def _restrict(t: BarTableau, k: int) -> tuple[BarTableau | None, _Work]:
    shift = 2 * (k - 1)
    w = _Work.of(t)
    sub_cells = {b: e - shift for b, e in w.cells.items() if letter(e) in (k, k + 1)}
    sub_bars = [b for b in w.bars if next(iter(b)) in sub_cells]
    if not sub_cells:
        return None, w
    return BarTableau.make(None, sub_cells, sub_bars), w


def tau(t: BarTableau, k: int = 1, trace: list | None = None) -> BarTableau:
    """Exchange the multiplicities of letters ``k`` and ``k+1`` in a semistandard bar tableau.

    The cells holding ``k', k, (k+1)', k+1`` are relabeled to ``1', 1, 2', 2``,
    sent through ``unswap_all . reverse_weight . swap_all`` and relabeled back.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not is_semistandard(t):
        raise ValueError("tau needs a semistandard bar tableau")
    sub, w = _restrict(t, k)
    if sub is None:
        return t
    mid = swap_all(sub)
    flipped = reverse_weight(mid)
    done = unswap_all(flipped)
    if trace is not None:
        trace.extend([sub, mid, flipped, done])
    shift = 2 * (k - 1)
    keep = [b for b in w.bars if next(iter(b)) not in sub.cell_map]
    cells = {b: e for b, e in w.cells.items() if b not in sub.cell_map}
    cells.update({b: e + shift for b, e in done.cells})
    return BarTableau.make(t.shape, cells, keep + [list(b) for b in done.bars])
