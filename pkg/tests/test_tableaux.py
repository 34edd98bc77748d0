from itertools import combinations, product

import pytest

from shifted_kpq.shapes import shifted_diagram, strict_partitions_up_to, sub_partitions
from shifted_kpq.tableaux import (BarTableau, PlanePartition, SetValuedTableau, entry_str,
                                  enumerate_tableaux, is_valid, parse_entry, tableau_from_json,
                                  validate, weight)


def svt(outer, cells):
    return SetValuedTableau.make(shifted_diagram(outer),
                                 {b: [parse_entry(e) for e in v.split()] for b, v in cells.items()})


def pp(outer, cells):
    return PlanePartition.make(shifted_diagram(outer), {b: parse_entry(v) for b, v in cells.items()})


# the two set-valued tableaux of shape (4,2,1) drawn in the introduction
SVT_A = svt((4, 2, 1), {(3, 3): "3 4 5", (2, 2): "2'", (2, 3): "3'",
                        (1, 1): "1", (1, 2): "2'", (1, 3): "2", (1, 4): "3' 3"})
SVT_B = svt((4, 2, 1), {(3, 3): "5", (2, 2): "3'", (2, 3): "3",
                        (1, 1): "1 2", (1, 2): "2", (1, 3): "2 3'", (1, 4): "3 4"})

# the two plane partitions of shape (5,3,2,1)
PP_A = pp((5, 3, 2, 1), {(4, 4): "3", (3, 3): "2", (3, 4): "3", (2, 2): "1", (2, 3): "2'",
                         (2, 4): "2", (1, 1): "1'", (1, 2): "1'", (1, 3): "1", (1, 4): "1",
                         (1, 5): "5'"})
PP_B = pp((5, 3, 2, 1), {(4, 4): "3'", (3, 3): "2'", (3, 4): "2", (2, 2): "1", (2, 3): "2'",
                         (2, 4): "2", (1, 1): "1", (1, 2): "1", (1, 3): "1", (1, 4): "1",
                         (1, 5): "5"})

# the bar tableau of shape (5,3) drawn next to its filling and bar partition
BT_A = BarTableau.make(shifted_diagram((5, 3)),
                       {(2, 2): 4, (2, 3): 4, (2, 4): 5, (1, 1): 2, (1, 2): 2, (1, 3): 2,
                        (1, 4): 5, (1, 5): 6},
                       [[(2, 2), (2, 3)], [(1, 4), (2, 4)], [(1, 1), (1, 2)], [(1, 3)], [(1, 5)]])


def test_entry_encoding():
    assert [parse_entry(s) for s in ("1'", "1", "2'", "2")] == [1, 2, 3, 4]
    assert entry_str(5) == "3'"


def test_set_valued_examples():
    for t in (SVT_A, SVT_B):
        assert is_valid(t, "Q")
        w = weight(t)
        assert w.size == 10
        assert w.vector(5) == (1, 3, 4, 1, 1)
    assert not is_valid(SVT_A, "P")


def test_plane_partition_examples():
    for t in (PP_A, PP_B):
        assert is_valid(t, "Q")
        assert not is_valid(t, "P")
        w = weight(t)
        assert w.size == 9
        assert w.vector(5) == (4, 3, 1, 0, 1)


def test_bar_tableau_example():
    assert is_valid(BT_A, "Q")
    w = weight(BT_A)
    assert w.size == 5
    assert w.vector(3) == (2, 1, 2)


def test_empty_entry_set_is_invalid():
    t = SetValuedTableau(shifted_diagram((1,)), (((1, 1), ()),))
    assert validate(t, "Q")


def test_json_round_trip():
    for t in (SVT_A, PP_A, BT_A):
        kind = {SetValuedTableau: "SVT", PlanePartition: "PP", BarTableau: "BT"}[type(t)]
        assert tableau_from_json(t.to_json(), kind) == t


def test_small_enumerations():
    bars = list(enumerate_tableaux(shifted_diagram((2,)), "BT_Q", 1))
    assert len(bars) == 3
    assert len(list(enumerate_tableaux(shifted_diagram((1,)), "SVT_Q", 1))) == 3
    for m in range(1, 5):
        pps = list(enumerate_tableaux(shifted_diagram((1,)), "PP_P", m))
        assert sorted(t.cells[0][1] for t in pps) == [2 * v - 1 for v in range(1, m + 1)]


def test_enumeration_order_is_deterministic():
    shape = shifted_diagram((3, 1))
    assert list(enumerate_tableaux(shape, "BT_Q", 2)) == list(enumerate_tableaux(shape, "BT_Q", 2))


def _shapes(max_boxes):
    for lam in strict_partitions_up_to(max_boxes + 2):
        for mu in sub_partitions(lam):
            shape = shifted_diagram(lam, mu)
            if 1 <= len(shape) <= max_boxes:
                yield shape


def _brute_svt(shape, letters):
    alphabet = range(1, 2 * letters + 1)
    subsets = [s for k in range(1, len(alphabet) + 1) for s in combinations(alphabet, k)]
    boxes = sorted(shape.boxes)
    for choice in product(subsets, repeat=len(boxes)):
        yield SetValuedTableau.make(shape, dict(zip(boxes, choice)))


def _brute_pp(shape, letters):
    boxes = sorted(shape.boxes)
    for choice in product(range(1, 2 * letters + 1), repeat=len(boxes)):
        yield PlanePartition.make(shape, dict(zip(boxes, choice)))


def _brute_bt(shape, letters):
    boxes = sorted(shape.boxes)
    pairs = [(a, b) for a in boxes for b in boxes
             if (b[0] == a[0] and b[1] == a[1] + 1) or (b[1] == a[1] and b[0] == a[0] + 1)]
    for choice in product(range(1, 2 * letters + 1), repeat=len(boxes)):
        cells = dict(zip(boxes, choice))
        same = [p for p in pairs if cells[p[0]] == cells[p[1]]]
        for k in range(len(same) + 1):
            for links in combinations(same, k):
                parent = {b: b for b in boxes}

                def find(b):
                    while parent[b] != b:
                        b = parent[b]
                    return b
                for a, b in links:
                    parent[find(a)] = find(b)
                groups = {}
                for b in boxes:
                    groups.setdefault(find(b), []).append(b)
                yield BarTableau.make(shape, cells, groups.values())


@pytest.mark.parametrize("family,brute,max_boxes", [
    ("SVT", _brute_svt, 3), ("PP", _brute_pp, 6), ("BT", _brute_bt, 5)])
def test_enumeration_matches_brute_force(family, brute, max_boxes):
    for shape in _shapes(max_boxes):
        for pq in "PQ":
            got = list(enumerate_tableaux(shape, f"{family}_{pq}", 2))
            assert len(got) == len(set(got))
            want = {t for t in brute(shape, 2) if is_valid(t, pq)}
            assert set(got) == want


def test_family_containment():
    for shape in _shapes(5):
        for family in ("SVT", "PP", "BT"):
            p = set(enumerate_tableaux(shape, family + "_P", 2))
            q = set(enumerate_tableaux(shape, family + "_Q", 2))
            assert p <= q


def test_bar_orientation():
    for shape in _shapes(5):
        for t in enumerate_tableaux(shape, "BT_Q", 2):
            cells = t.cell_map
            for bar in t.bars:
                if len(bar) > 1:
                    rows = {b[0] for b in bar}
                    primed = cells[bar[0]] % 2 == 1
                    assert (len(rows) > 1) == primed
