from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.classes import ClassSpec, enumerate_av, minimal_basis
from permlab.errors import BudgetExceeded
from permlab.machines import (
    TWO_TWO_STACK_BASIS, CMachine, RSStackSorter, SeriesSorter, avoids_barred_35241,
    avoids_barred_35241_slow, bounded_pq_sortable, greedy_stack_sort, knuth_horizontal,
    murphy_unsortable, murphy_vertical, one_skew, ordered_stack_basis_element, pq_outputs,
    pq_pairs_count, replay_series, rs_stack_sortable, series_generated, series_sortable,
    series_witness, west_sortable,
)
from permlab.perm import contains, identity, inverse, max_drop, parse_perm, reverse, sorting_dual

from conftest import perms


def all_perms(n):
    return list(permutations(range(1, n + 1)))


def test_greedy_stack_sort():
    assert greedy_stack_sort((2, 3, 1)) == (2, 1, 3)
    assert greedy_stack_sort((3, 1, 2)) == (1, 2, 3)
    with pytest.raises(ValueError):
        west_sortable((1,), 0)


def test_west_one_stack_is_av231():
    spec = ClassSpec.of("231")
    for n in range(8):
        assert {p for p in all_perms(n) if west_sortable(p, 1)} == set(enumerate_av(spec, n)[n])


def test_west_two_stack_characterization_small():
    for n in range(8):
        for p in all_perms(n):
            expected = not contains((2, 3, 4, 1), p) and avoids_barred_35241(p)
            assert west_sortable(p, 2) == expected


@given(perms(max_size=9))
@settings(max_examples=300)
def test_barred_check_matches_definition(p):
    assert avoids_barred_35241(p) == avoids_barred_35241_slow(p)


def test_two_stacks_in_series():
    assert all(series_sortable(p, 2) for n in range(7) for p in all_perms(n))
    assert not series_sortable(parse_perm("2435761"), 2)
    assert series_witness(parse_perm("2435761"), 2) is None


@given(perms(max_size=7))
@settings(max_examples=80)
def test_witness_replays_to_identity(p):
    moves = series_witness(p, 2)
    assert moves is not None
    assert replay_series(p, 2, moves) == identity(len(p))


def test_replay_rejects_illegal_moves():
    with pytest.raises(ValueError):
        replay_series((1,), 2, ["pop 1 1"])
    with pytest.raises(ValueError):
        replay_series((1,), 2, ["jump"])


def test_one_stack_in_series_is_av231():
    for n in range(7):
        got = {p for p in all_perms(n) if series_sortable(p, 1)}
        assert got == set(enumerate_av(ClassSpec.of("231"), n)[n])


def test_sorting_and_generating_are_dual():
    for t in (1, 2):
        for n in range(7):
            generated = series_generated(t, n)
            sortable = {p for p in all_perms(n) if series_sortable(p, t)}
            assert generated == {inverse(p) for p in sortable}


def test_budget_is_enforced():
    sorter = SeriesSorter(2, budget=1)
    with pytest.raises(BudgetExceeded):
        sorter.sortable(parse_perm("2435761"))


def test_ordered_stacks_basis():
    assert [ordered_stack_basis_element(k) for k in (2, 3, 4)] == [
        (2, 3, 4, 1), (2, 5, 4, 1, 6, 3), (2, 7, 4, 1, 6, 3, 8, 5)]
    basis = minimal_basis(lambda p: series_sortable(p, 2, ordered=True), 6)
    assert [b for level in basis.values() for b in level] == [(2, 3, 4, 1), (2, 5, 4, 1, 6, 3)]
    with pytest.raises(ValueError):
        ordered_stack_basis_element(1)


def test_two_two_stack_basis():
    counts = [sum(rs_stack_sortable(p, 2, 2) for p in all_perms(n)) for n in range(1, 7)]
    assert counts == [1, 2, 6, 24, 116, 628]
    basis = minimal_basis(lambda p: rs_stack_sortable(p, 2, 2), 6)
    assert sorted(b for level in basis.values() for b in level) == sorted(TWO_TWO_STACK_BASIS)


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)])
def test_rs_stack_duality(r, s):
    for n in range(7):
        for p in all_perms(n):
            assert rs_stack_sortable(p, r, s) == rs_stack_sortable(sorting_dual(p), s, r)


def test_rs_validation():
    with pytest.raises(ValueError):
        RSStackSorter(0, 1)


def test_c_machine_basis_theorem_small():
    s3 = all_perms(3)
    for k in (1, 2):
        for basis in combinations(s3, k):
            machine = CMachine(ClassSpec(frozenset(basis)).basis)
            levels = enumerate_av(ClassSpec(frozenset(one_skew(basis))), 5)
            assert all(machine.generated(n) == frozenset(levels[n]) for n in range(6))


def test_c_machine_wide_pop_matches_rs_stack():
    machine = CMachine.of("123", "213", pop_width=2)
    for n in range(7):
        sortable = {p for p in all_perms(n) if rs_stack_sortable(p, 2, 2)}
        assert machine.generated(n) == {inverse(p) for p in sortable}


def test_priority_queue_pairs():
    assert [pq_pairs_count(n) for n in range(1, 6)] == [1, 3, 16, 125, 1296]
    assert pq_outputs((2, 1)) == {(1, 2), (2, 1)}


def test_priority_queue_capacity():
    for n in range(1, 8):
        for p in all_perms(n):
            for k in range(4):
                assert bounded_pq_sortable(p, k + 1) == (max_drop(p) <= k)
    with pytest.raises(ValueError):
        bounded_pq_sortable((1,), 0)


def test_juxtapositions():
    assert knuth_horizontal((1, 2), (2, 1)) == (4, 3, 2, 1)
    assert murphy_vertical((1, 2), (1, 2)) == (4, 3, 1, 2)
    assert murphy_unsortable((2, 1)) == (2, 3, 1)
    assert len(murphy_unsortable((2, 4, 1, 3))) == 13
    with pytest.raises(ValueError):
        knuth_horizontal((1,), (1,), {1, 2})


@given(perms(min_size=1, max_size=4), perms(min_size=1, max_size=4), st.data())
@settings(max_examples=100)
def test_juxtaposition_duality(pi, sigma, data):
    n = len(pi) + len(sigma)
    values = set(data.draw(st.lists(st.integers(1, n), min_size=len(pi), max_size=len(pi), unique=True)))
    positions = {n + 1 - v for v in values}
    left = sorting_dual(knuth_horizontal(pi, sigma, values))
    assert left == murphy_vertical(sorting_dual(pi), sorting_dual(sigma), positions)


def test_murphy_construction_of_21_needs_more_than_one_stack():
    assert not series_sortable(murphy_unsortable((2, 1)), 1)
    assert reverse(murphy_unsortable((1,))) == (1,)


def test_single_stack_sorts_av231_and_generates_av312():
    for n in range(9):
        sortable = {p for p in enumerate_av(ClassSpec(), n)[n] if series_sortable(p, 1)}
        assert sortable == set(enumerate_av(ClassSpec.of("231"), n)[n])
        assert series_generated(1, n) == frozenset(enumerate_av(ClassSpec.of("312"), n)[n])
