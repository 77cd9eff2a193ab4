from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.classes import (
    ClassSpec, RayWestError, catalan, class_compose_members, count_av, enumerate_av, g_k,
    members, minimal_basis, ray_west_j, symmetry_classes, wilf_classify,
)
from permlab.errors import BoundExceeded, ClosureViolation
from permlab.fastcount import count_av_fast
from permlab.perm import contains
from permlab.reference import REFERENCES

from conftest import perms


def brute_count(spec, n):
    return sum(1 for p in permutations(range(1, n + 1)) if p in spec)


def test_spec_parsing_and_minimality():
    spec = ClassSpec.parse("Av(12, 123)")
    assert spec.basis == frozenset({(1, 2)})
    assert str(ClassSpec.of("3142", "2413")) == "Av(2413, 3142)"
    assert (2, 1) in ClassSpec.of("12") and (1, 2) not in ClassSpec.of("12")


def test_catalan_classes():
    cat = [catalan(n) for n in range(10)]
    for b in ("123", "132", "231", "321"):
        assert count_av(ClassSpec.of(b), 9) == cat


def test_empty_and_trivial_bases():
    assert count_av(ClassSpec(), 5) == [factorial(n) for n in range(6)]
    assert count_av(ClassSpec.of("1"), 3) == [1, 0, 0, 0]
    assert count_av(ClassSpec(frozenset([()])), 2) == [0, 0, 0]


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_av(ClassSpec.of("123"), 15)


@given(st.lists(perms(min_size=1, max_size=4), min_size=1, max_size=3))
@settings(max_examples=60)
def test_counts_match_brute_force(basis):
    spec = ClassSpec(frozenset(basis))
    counts = count_av(spec, 6)
    assert counts == [brute_count(spec, n) for n in range(7)]
    assert counts == count_av_fast(spec, 6)


@given(st.lists(perms(min_size=1, max_size=4), min_size=1, max_size=3))
@settings(max_examples=30)
def test_members_avoid_every_basis_element(basis):
    spec = ClassSpec(frozenset(basis))
    for p in members(spec, 5):
        assert not any(contains(b, p) for b in spec.basis)


def test_symmetry_class_counts():
    assert tuple(len(symmetry_classes(n)) for n in range(1, 8)) == REFERENCES["A000903"].values
    assert symmetry_classes(3) == [[(1, 2, 3), (3, 2, 1)], [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]]


def test_wilf_candidates_small():
    counts = [wilf_classify(n, 7).count for n in range(1, 5)]
    assert counts == [1, 1, 1, 3]
    four = wilf_classify(4, 7)
    assert any({(1, 3, 4, 2), (2, 4, 1, 3)} <= set(c) for c in four.classes)
    assert any(set(c) == {(1, 3, 2, 4)} for c in four.classes)


def test_wilf_parallel_matches_serial():
    assert wilf_classify(4, 6, workers=2) == wilf_classify(4, 6)


def test_codimension_formulas():
    for m in range(1, 5):
        for b in permutations(range(1, m + 1)):
            assert g_k(b, 1) == m * m + 1
            assert 0 <= ray_west_j(b) <= max(m - 1, 0)
    assert ray_west_j((1, 2, 3)) == ray_west_j((3, 2, 1))
    assert isinstance(RayWestError("x"), Exception)


def test_minimal_basis_recovers_classes():
    spec = ClassSpec.of("231", "4123")
    basis = minimal_basis(lambda p: p in spec, 5, check_closure=True)
    assert basis == {1: [], 2: [], 3: [(2, 3, 1)], 4: [(4, 1, 2, 3)], 5: []}


def test_minimal_basis_closure_violation():
    with pytest.raises(ClosureViolation):
        minimal_basis(lambda p: p != (1, 2), 3, check_closure=True)


def test_class_composition():
    every = set(permutations(range(1, 6)))
    assert class_compose_members(ClassSpec.of("231"), ClassSpec.of("231"), 5) == every
    inc = class_compose_members(ClassSpec.of("21"), ClassSpec.of("12"), 4)
    assert inc == {(4, 3, 2, 1)}


def test_wilf_counter_is_pluggable():
    slow = wilf_classify(4, 8, counter=lambda args: count_av(ClassSpec(frozenset([args[0]])), args[1]))
    assert slow == wilf_classify(4, 8)
