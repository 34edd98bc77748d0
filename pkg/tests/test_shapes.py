from dataclasses import astuple

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shifted_kpq.shapes import (SkewShape, compose_shapes, composition_offsets, contains,
                                corner_classes, corner_deletions, format_partition,
                                is_shifted_ribbon, is_strict_shape, parse_partition,
                                removable_corners, ribbon_partners, ribbon_params,
                                shifted_diagram, size, strict_partition, strict_partitions_of,
                                strict_partitions_up_to, unshifted_diagram)


def test_shifted_diagram_examples():
    assert shifted_diagram((3, 2)).boxes == {(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)}
    skew = shifted_diagram((4, 2, 1), (2,))
    assert skew.boxes == {(1, 3), (1, 4), (2, 2), (2, 3), (3, 3)}
    bad = shifted_diagram((2,), (3, 1))
    assert not bad.contained and not bad.boxes


def test_strict_partition_validation():
    assert strict_partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        strict_partition([2, 2])


def test_partition_text_round_trip():
    assert parse_partition("5,4,1") == (5, 4, 1)
    assert parse_partition("-") == ()
    assert format_partition(()) == "-"
    with pytest.raises(ValueError):
        parse_partition("2,2")


def test_removable_corners():
    assert removable_corners((3, 2)) == {(2, 3)}
    assert removable_corners((1,)) == {(1, 1)}
    assert removable_corners((5, 4, 1)) == {(2, 5), (3, 3)}
    assert corner_deletions((1,)) == ((1,), ())


def test_removable_corners_brute_force():
    for lam in strict_partitions_up_to(9):
        boxes = shifted_diagram(lam).boxes
        brute = {b for b in boxes
                 if is_strict_shape(boxes - {b}) and not SkewShape.from_boxes(boxes - {b}).inner}
        assert removable_corners(lam) == brute


def test_ribbons():
    assert is_shifted_ribbon(shifted_diagram((8, 5, 4, 1), (5, 4, 1)))
    assert is_shifted_ribbon(shifted_diagram((8, 4, 3, 1), (5, 4, 1)))
    assert not is_shifted_ribbon(shifted_diagram((3, 2)))


def test_ribbon_params_examples():
    p = ribbon_params((8, 5, 3, 1), (5, 4, 1))
    assert (p.scc, p.mcc, p.fb, p.res) == (0, 2, 2, 3)
    for n in range(2, 8):
        q = ribbon_params((n,), ())
        assert (q.scc, q.mcc, q.fb, q.res) == (0, 1, 0, n)
    r = ribbon_params((2, 1), (1,))
    assert (r.scc_star, r.mcc_star) == (0, 0)
    assert r.fb_star == 2


def test_ribbon_param_identities():
    for Lam in strict_partitions_up_to(9):
        for Psi in ribbon_partners(Lam):
            p = ribbon_params(Lam, Psi)
            n = size(Lam) - size(Psi)
            assert p.scc + 2 * p.mcc + p.fb + p.res == n + 2
            assert p.scc_star + 2 * p.mcc_star + p.fb_star + p.res_star == n + 1
            if n:
                assert p.res >= 2 and p.res_star >= 1


def test_ribbon_pair_precondition():
    with pytest.raises(ValueError):
        ribbon_params((4, 2), (1,))


def test_corner_class_counts():
    assert not any(astuple(corner_classes((3,), ())))
    for Lam in strict_partitions_up_to(9):
        if not Lam:
            continue
        for Psi in ribbon_partners(Lam):
            c = corner_classes(Lam, Psi)
            p = ribbon_params(Lam, Psi)
            assert c.U | c.V | c.W == c.U_star | c.V_star | c.W_star
            if Lam[0] - (Psi[0] if Psi else 0) >= 2:
                assert len(c.U) == p.scc
                assert len(c.V) + 2 * len(c.W) == p.mcc + p.fb - 1
                assert len(c.U_star) == p.scc_star
                assert len(c.V_star) + 2 * len(c.W_star) == p.mcc_star + p.fb_star - 1


def test_composed_shapes_of_worked_example():
    rho, tau = shifted_diagram((3, 2)), unshifted_diagram((2, 2), (1,))
    assert composition_offsets(rho, tau) == (1, 4)
    right = compose_shapes(rho, tau, "right")
    below = compose_shapes(rho, tau, "below")
    merge = compose_shapes(rho, tau, "merge")
    assert (right.outer, right.inner) == ((6, 5, 2), (5,))
    assert (below.outer, below.inner) == ((6, 5, 3, 2), (5, 3))
    assert (merge.outer, merge.inner) == ((5, 4, 2), (4,))
    assert len(merge) == len(rho) + len(tau) - 1
    assert all(len(s.diagonal) == len(rho.diagonal) for s in (right, below, merge))


def test_one_row_compositions():
    for lam in [(1,), (2, 1), (4, 2)]:
        for n in (1, 2, 3):
            rho, tau = shifted_diagram(lam), unshifted_diagram((n,))
            l1, rest = lam[0], lam[1:]
            right = compose_shapes(rho, tau, "right")
            below = compose_shapes(rho, tau, "below")
            merge = compose_shapes(rho, tau, "merge")
            assert right.boxes == shifted_diagram((n + l1,) + rest).boxes
            assert below.boxes == shifted_diagram((n + l1, l1) + rest, (l1,)).boxes
            assert merge.boxes == shifted_diagram((n + l1 - 1,) + rest).boxes


def test_strict_partition_listings():
    assert list(strict_partitions_up_to(3)) == [(), (1,), (2,), (3,), (2, 1)]
    assert list(strict_partitions_up_to(0)) == [()]
    assert strict_partitions_of(6) == [(6,), (5, 1), (4, 2), (3, 2, 1)]


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(list(strict_partitions_up_to(10))), st.data())
def test_skew_shape_boxes(lam, data):
    mu = data.draw(st.sampled_from(list(strict_partitions_up_to(size(lam)))))
    shape = shifted_diagram(lam, mu)
    if contains(lam, mu):
        assert len(shape) == size(lam) - size(mu)
        assert SkewShape.from_boxes(shape.boxes).boxes == shape.boxes
    else:
        assert not shape.boxes
