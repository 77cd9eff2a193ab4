from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.perm import (
    PermutationError, SYMMETRIES, apply_symmetry, as_perm, canonical_rep, complement, compose,
    contains, contains_at, deletions, direct_sum, displacement_set, excedances, extensions,
    fixed_points, format_perm, identity, inflate, inverse, is_skew_decomposable,
    is_sum_decomposable, lr_maxima_positions, max_drop, occurrences, parse_perm,
    patterns_of_length, reverse, skew_sum, sorting_dual, standardize, statistics, symmetry_images,
)

from conftest import perms


def brute_contains(pattern, host):
    k = len(pattern)
    return any(standardize([host[i] for i in idx]) == tuple(pattern)
               for idx in combinations(range(len(host)), k))


def test_parse_and_format():
    assert parse_perm("362957184") == (3, 6, 2, 9, 5, 7, 1, 8, 4)
    assert parse_perm("10,3,1,2,4,5,6,7,8,9")[0] == 10
    assert parse_perm("") == () == parse_perm("e")
    assert format_perm((1, 2, 3)) == "123"
    assert format_perm(tuple(range(10, 0, -1))).startswith("10,9")
    with pytest.raises(PermutationError):
        parse_perm("122")


def test_containment_figure_example():
    host = parse_perm("362957184")
    assert contains(parse_perm("2413"), host)
    assert not contains(parse_perm("4321"), parse_perm("1234"))
    assert occurrences((1, 2), (2, 1, 3)) == [(1, 3), (2, 3)]
    assert occurrences((2, 1), (1, 2, 3)) == []


def test_symmetry_examples():
    assert sorting_dual((2, 3, 1)) == (2, 3, 1)
    assert inverse((3, 1, 2)) == (2, 3, 1)
    assert compose((3, 2, 1), (2, 3, 1)) == (2, 1, 3)
    assert compose((3, 1, 2), (2, 3, 1)) == (1, 2, 3)
    assert len(symmetry_images((1, 3, 2))) == 4
    assert canonical_rep((2, 3, 1)) == (1, 3, 2)


def test_sums_and_inflation():
    assert skew_sum((1,), (2, 3, 1)) == (4, 2, 3, 1)
    assert direct_sum((3, 2, 1), (1,), (4, 3, 2, 1)) == (3, 2, 1, 4, 8, 7, 6, 5)
    assert inflate((1, 2), [(2, 1), (1,)]) == (2, 1, 3)
    assert inflate((2, 1), [(1, 2), (1,)]) == (2, 3, 1)
    with pytest.raises(PermutationError):
        inflate((1, 2), [(1,)])


def test_statistics_of_231():
    s = statistics((2, 3, 1))
    assert s.fixed_points == 0 and s.excedances == 2
    assert s.displacement_set == frozenset({1, -2})
    assert s.max_drop == 2 and s.lr_maxima_positions == (1, 2)


def test_decomposability():
    assert is_sum_decomposable((2, 1, 3))
    assert not is_sum_decomposable((2, 3, 1))
    assert is_skew_decomposable((2, 3, 1))
    assert not is_sum_decomposable((1,)) and not is_skew_decomposable(())


@given(perms(max_size=4), perms(max_size=8))
@settings(max_examples=300)
def test_contains_matches_brute_force(pattern, host):
    assert contains(pattern, host) == brute_contains(pattern, host)


@given(perms(min_size=1, max_size=4), perms(min_size=1, max_size=7), st.data())
@settings(max_examples=200)
def test_anchored_containment(pattern, host, data):
    j = data.draw(st.integers(0, len(pattern) - 1))
    g = data.draw(st.integers(0, len(host) - 1))
    expected = any(occ[j] == g + 1 for occ in occurrences(pattern, host))
    assert contains_at(pattern, host, j, g) == expected


@given(perms(max_size=4), perms(max_size=7))
@settings(max_examples=150)
def test_occurrences_are_exact(pattern, host):
    occ = occurrences(pattern, host)
    expected = [tuple(i + 1 for i in idx) for idx in combinations(range(len(host)), len(pattern))
                if standardize([host[i] for i in idx]) == pattern]
    assert occ == expected


@given(perms(max_size=9))
def test_symmetries_are_involutions_or_group_elements(p):
    assert inverse(inverse(p)) == p
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    assert sorting_dual(sorting_dual(p)) == p
    assert sorting_dual(p) == inverse(complement(reverse(p)))
    images = symmetry_images(p)
    assert all(symmetry_images(q) == images for q in images)


@given(perms(max_size=5), perms(max_size=7))
@settings(max_examples=150)
def test_symmetries_preserve_containment(pattern, host):
    for name in SYMMETRIES:
        assert contains(apply_symmetry(name, pattern), apply_symmetry(name, host)) == contains(pattern, host)


@given(perms(max_size=7))
def test_compose_with_inverse_is_identity(p):
    assert compose(p, inverse(p)) == identity(len(p))


@given(perms(max_size=5), perms(max_size=5))
def test_skew_sum_displacement_law(a, b):
    left = {d + len(b) for d in displacement_set(a)}
    right = {d - len(a) for d in displacement_set(b)}
    assert displacement_set(skew_sum(a, b)) == left | right
    assert displacement_set(direct_sum(a, b)) == displacement_set(a) | displacement_set(b)


@given(perms(min_size=1, max_size=7))
def test_deletions_and_extensions_are_dual(p):
    assert all(p in extensions(q) for q in deletions(p))
    assert deletions(p) == patterns_of_length(p, len(p) - 1)
    assert len(extensions(p)) <= (len(p) + 1) ** 2


@given(perms(max_size=8))
def test_statistics_consistent(p):
    assert fixed_points(p) == sum(1 for i, v in enumerate(p, 1) if v == i)
    assert (0 in displacement_set(p)) == (fixed_points(p) > 0)
    assert excedances(p) + fixed_points(p) <= len(p)
    assert max_drop(p) == max([0] + [-d for d in displacement_set(p)])
    assert lr_maxima_positions(p)[:1] == ((1,) if p else ())


def test_as_perm_rejects_gaps():
    with pytest.raises(PermutationError):
        as_perm([1, 3])
    assert as_perm(x for x in [2, 1]) == (2, 1)


def test_all_small_permutations_standardize_to_themselves():
    for p in permutations(range(1, 6)):
        assert standardize(p) == p
        assert standardize([10 * v for v in p]) == p
