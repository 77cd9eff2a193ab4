"""Embedded regression suite comparing computations against the published
listings in :mod:`permlab.reference`.  Sizes are chosen to finish in a few
minutes on one core."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable

from .classes import ClassSpec, catalan, enumerate_av, g_k, minimal_basis, ray_west_j, \
    symmetry_classes
from .derangements import SEPARABLE, derangement_counts, derangement_proportions, \
    separable_displacement_dp
from .fastcount import count_av_fast
from .machines import TWO_TWO_STACK_BASIS, CMachine, bounded_pq_sortable, one_skew, \
    pq_pairs_count, rs_stack_sortable, series_sortable
from .order import partition_downset_rank, shape_profile
from .perm import max_drop, parse_perm
from .reference import REFERENCES
from .rooks import admissible_shapes, count_avoiding_frps, oplus_one_separator
from .sequences import TWO_TWO_STACK_POLY, algebraic_residual, hankel_report, render_ratio, \
    stieltjes_cf


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _by_length(ref: str, seq: list[int], n_max: int) -> bool:
    # seq is indexed from length 0, references from their offset
    r = REFERENCES[ref]
    return tuple(seq[r.offset: n_max + 1]) == r.through(n_max)


def check_stanton():
    ranks = partition_downset_rank((8, 8, 4, 4))
    ok = tuple(ranks) == REFERENCES["stanton"].values and not shape_profile(ranks).unimodal
    return ok, ",".join(map(str, ranks))


def check_fine():
    seqs = {c: derangement_counts(ClassSpec.of(c), 9) for c in ("132", "213", "321")}
    ok = all(_by_length("fine", s, 9) for s in seqs.values())
    return ok, ",".join(map(str, seqs["132"][1:]))


def check_other_derangements():
    a = derangement_counts(ClassSpec.of("231"), 9)
    b = derangement_counts(ClassSpec.of("123"), 9)
    return _by_length("A258041", a, 9) and _by_length("A318232", b, 9), f"231: {a[1:]}, 123: {b[1:]}"


def check_ratios():
    ok = True
    for c in ("231", "132", "123"):
        got = derangement_proportions(ClassSpec.of(c), 9)
        ref = REFERENCES[f"ratio{c}"]
        for n in range(2, 10):
            ok &= render_ratio(got[n]) == ref.at(n)
    return ok, "nine-digit proportions for lengths 2..9"


def check_separable():
    dp = separable_displacement_dp(12)
    ok = _by_length("schroder", list(dp.totals), 12) and _by_length("A393394", list(dp.derangements), 12)
    brute = derangement_counts(SEPARABLE, 8)
    ok &= list(dp.derangements[:9]) == brute
    return ok, f"derangements {dp.derangements[1:]}"


def check_symmetry_classes():
    got = [len(symmetry_classes(n)) for n in range(1, 8)]
    return tuple(got) == REFERENCES["A000903"].values, str(got)


def check_wilf_small():
    counts = []
    for n in range(1, 5):
        seqs = {tuple(count_av_fast(ClassSpec(frozenset([o[0]])), 9)) for o in symmetry_classes(n)}
        counts.append(len(seqs))
    return counts == [1, 1, 1, 3], str(counts)


def check_codimension():
    ok = all(g_k(b, 1) == len(b) ** 2 + 1 for m in range(1, 6) for b in permutations(range(1, m + 1)))
    js = {ray_west_j(b) for m in range(1, 6) for b in permutations(range(1, m + 1))}
    return ok, f"j values seen: {sorted(js)}"


def check_shape_wilf():
    ok = True
    for n in range(1, 6):
        for shape in admissible_shapes(n):
            c = {b: count_avoiding_frps(shape, b) for b in ((1, 2, 3), (3, 2, 1), (2, 1, 3),
                                                            (2, 3, 1), (3, 1, 2), (1, 3, 2))}
            ok &= c[1, 2, 3] == c[3, 2, 1] == c[2, 1, 3] and c[2, 3, 1] == c[3, 1, 2]
            ok &= c[1, 3, 2] >= c[3, 2, 1] >= c[2, 3, 1]
    return ok, "all admissible shapes with at most 5 columns"


def check_unbalanced():
    sep = oplus_one_separator((1, 3, 4, 2), (2, 4, 1, 3), 8)
    a = count_av_fast(ClassSpec.of("1324", "3416725"), 9)
    b = count_av_fast(ClassSpec.of("1234"), 9)
    return sep == 8 and a == b, f"separator {sep}; counts {a[1:]}"


def check_two_stacks():
    ok = all(series_sortable(p, 2) for n in range(7) for p in permutations(range(1, n + 1)))
    ok &= not series_sortable(parse_perm("2435761"), 2)
    basis = minimal_basis(lambda p: series_sortable(p, 2), 7)
    ok &= len(basis[7]) == REFERENCES["A111576"].at(7)
    return ok, f"{len(basis[7])} basis elements of length 7"


def check_two_two_stack():
    counts = [sum(rs_stack_sortable(p, 2, 2) for p in permutations(range(1, n + 1))) for n in range(1, 7)]
    basis = minimal_basis(lambda p: rs_stack_sortable(p, 2, 2), 6)
    found = sorted(b for level in basis.values() for b in level)
    series = count_av_fast(ClassSpec(frozenset(TWO_TWO_STACK_BASIS)), 10)
    res = algebraic_residual(TWO_TWO_STACK_POLY, series)
    ok = _by_length("A393395", [1] + counts, 6) and found == sorted(TWO_TWO_STACK_BASIS) and res.vanishes
    ok &= _by_length("A393395", series, 10)
    return ok, f"counts {counts}, residual zero through degree {res.checked_through}"


def check_c_machines():
    ok = True
    s3 = list(permutations((1, 2, 3)))
    for k in (1, 2, 3):
        for basis in combinations(s3, k):
            machine = CMachine(ClassSpec(frozenset(basis)).basis)
            levels = enumerate_av(ClassSpec(frozenset(one_skew(basis))), 6)
            ok &= all(machine.generated(n) == frozenset(levels[n]) for n in range(7))
    return ok, "every B in S_3 with |B| <= 3, lengths <= 6"


def check_priority_queues():
    ok = all(pq_pairs_count(n) == (n + 1) ** (n - 1) for n in range(1, 6))
    ok &= all(bounded_pq_sortable(p, k + 1) == (max_drop(p) <= k)
              for n in range(1, 8) for p in permutations(range(1, n + 1)) for k in range(5))
    return ok, "pair counts n <= 5; capacity law n <= 7"


def check_stieltjes():
    cat = [catalan(n) for n in range(21)]
    cf = stieltjes_cf(cat)
    rep = hankel_report(cat, 10)
    ok = all(a == 1 for a in cf.alphas[:11]) and set(rep.determinants) == {1}
    seq = count_av_fast(ClassSpec.of("4231", "4123", "4312"), 11)
    bad = hankel_report(seq, 6)
    cf2 = stieltjes_cf(seq)
    ok &= bad.any_negative or cf2.first_negative_index is not None or cf2.breakdown_index is not None
    return ok, f"A257562 Hankel minors {bad.determinants}"


CHECKS: dict[str, Callable[[], tuple[bool, str]]] = {
    "stanton-rank-sequence": check_stanton,
    "fine-derangements": check_fine,
    "derangements-231-123": check_other_derangements,
    "derangement-proportions": check_ratios,
    "separable-derangements": check_separable,
    "symmetry-classes": check_symmetry_classes,
    "wilf-candidates-small": check_wilf_small,
    "codimension-counts": check_codimension,
    "shape-wilf": check_shape_wilf,
    "unbalanced-wilf": check_unbalanced,
    "two-stacks": check_two_stacks,
    "two-two-stack": check_two_two_stack,
    "c-machine-basis": check_c_machines,
    "priority-queues": check_priority_queues,
    "stieltjes": check_stieltjes,
}


def run_suite(names=None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        if names and name not in names:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, round(time.perf_counter() - start, 3)))
    return results
