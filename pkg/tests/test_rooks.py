from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.classes import ClassSpec, catalan, count_av
from permlab.errors import BoundExceeded, InadmissibleShape
from permlab.rooks import (
    FerrersShape, FullRookPlacement, admissible_shapes, brute_frp_contains, count_avoiding_frps,
    frp_contains, frps, oplus_one_separator, shape_wilf_probe, stankova_dominance,
)


def test_shape_validation():
    assert FerrersShape.parse("4,4,3,1").n == 4
    assert str(FerrersShape((3, 3, 2))) == "3,3,2"
    with pytest.raises(InadmissibleShape):
        FerrersShape((2, 3))
    assert not FerrersShape((3, 1, 1)).admissible
    with pytest.raises(InadmissibleShape):
        FerrersShape((3, 1, 1)).require_admissible()


def test_admissible_shapes_are_catalan():
    for n in range(1, 8):
        shapes = list(admissible_shapes(n))
        assert len(shapes) == catalan(n)
        assert all(s.admissible and s.heights[0] == n for s in shapes)
        assert shapes == sorted(shapes, key=lambda s: s.heights)


def test_frp_counts():
    assert len(frps(FerrersShape.square(4))) == 24
    assert len(frps(FerrersShape((3, 3, 2)))) == 4
    assert len(frps(FerrersShape((3, 2, 1)))) == 1
    with pytest.raises(BoundExceeded):
        frps(FerrersShape.square(10))


def test_square_counts_are_class_counts():
    for beta in ((1, 3, 2), (2, 1, 3, 4), (2, 4, 1, 3)):
        counts = count_av(ClassSpec(frozenset([beta])), 7)
        for n in range(1, 8):
            assert count_avoiding_frps(FerrersShape.square(n), beta) == counts[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_containment_matches_brute_force(n):
    patterns = [p for k in range(1, 4) for p in permutations(range(1, k + 1))]
    for shape in admissible_shapes(n):
        for placement in frps(shape):
            for sigma in patterns:
                assert frp_contains(placement, sigma) == brute_frp_contains(placement, sigma)


@given(st.data())
@settings(max_examples=40)
def test_counting_matches_enumeration(data):
    n = data.draw(st.integers(1, 6))
    shape = data.draw(st.sampled_from(list(admissible_shapes(n))))
    k = data.draw(st.integers(1, 4))
    beta = tuple(data.draw(st.permutations(range(1, k + 1))))
    expected = sum(1 for p in frps(shape) if not frp_contains(p, beta))
    assert count_avoiding_frps(shape, beta) == expected


def test_full_placement_fields():
    p = frps(FerrersShape((2, 2)))[0]
    assert isinstance(p, FullRookPlacement) and sorted(p.rows) == [1, 2]


def test_known_separations():
    assert shape_wilf_probe((1, 3, 2), (2, 3, 1), 4).separating_shape == FerrersShape((4, 4, 4, 3))
    probe = shape_wilf_probe((1, 2, 3), (3, 2, 1), 6)
    assert probe.equivalent_so_far and probe.shapes_checked == sum(catalan(n) for n in range(1, 7))


def test_dominance_on_small_shapes():
    for n in range(1, 6):
        for shape in admissible_shapes(n):
            assert stankova_dominance(shape).holds


def test_oplus_one_separator():
    assert oplus_one_separator((1, 3, 4, 2), (2, 4, 1, 3), 8) == 8
    assert oplus_one_separator((1, 2), (1, 2), 5) is None
