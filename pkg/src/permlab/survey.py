"""Scans that look for counterexamples to open unimodality and sign
conjectures over a bounded range.  A clean scan is evidence, not proof."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

import numba
import numpy as np

from .derangements import evaluate, g_polynomial_123
from .errors import check_bound
from .order import comp_downset_rank, downset_ranks, is_unimodal

MAX_SURVEY_LENGTH = 11
MAX_SURVEY_SUM = 24
MAX_SURVEY_GN = 13


@dataclass
class SurveyReport:
    name: str
    bounds: dict
    checked: int
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return asdict(self) | {"clean": self.clean}

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")


# -- permutation downsets ------------------------------------------------


@numba.njit(cache=True)
def _popcounts(bits):
    table = np.zeros(1 << bits, np.int64)
    for m in range(1, 1 << bits):
        table[m] = table[m >> 1] + (m & 1)
    return table


@numba.njit(cache=True)
def _ranks_of(p, n, pop, keys, ranks):
    # pattern of each subset of positions, coded by the in-subset rank of
    # each chosen entry (base 16) with the subset size in the high bits
    lower = np.zeros(n, np.int64)
    for i in range(n):
        m = 0
        for j in range(n):
            if p[j] < p[i]:
                m |= 1 << j
        lower[i] = m
    total = 1 << n
    for mask in range(total):
        code = 0
        for i in range(n):
            if (mask >> i) & 1:
                code = code * 16 + pop[mask & lower[i]]
        keys[mask] = (pop[mask] << 44) | code
    s = np.sort(keys[:total])
    for k in range(n + 1):
        ranks[k] = 0
    prev = -1
    for v in s:
        if v != prev:
            ranks[v >> 44] += 1
            prev = v


@numba.njit(cache=True)
def _unimodal(a, n):
    i = 0
    while i < n and a[i] <= a[i + 1]:
        i += 1
    while i < n and a[i] >= a[i + 1]:
        i += 1
    return i >= n


@numba.njit(cache=True)
def _less(a, b, n):
    for i in range(n):
        if a[i] != b[i]:
            return b[i] < a[i]
    return False


@numba.njit(cache=True)
def _is_canonical(p, n, img):
    # p is skipped unless it is the least of its eight symmetry images
    inv = np.empty(n, np.int64)
    for i in range(n):
        inv[p[i] - 1] = i + 1
    for which in range(7):
        for i in range(n):
            if which == 0:
                img[i] = p[n - 1 - i]
            elif which == 1:
                img[i] = n + 1 - p[i]
            elif which == 2:
                img[i] = n + 1 - p[n - 1 - i]
            elif which == 3:
                img[i] = inv[i]
            elif which == 4:
                img[i] = inv[n - 1 - i]
            elif which == 5:
                img[i] = n + 1 - inv[i]
            else:
                img[i] = n + 1 - inv[n - 1 - i]
        if _less(p, img, n):
            return False
    return True


@numba.njit(cache=True)
def _scan_all(n):
    """Returns (orbit representatives checked, failures, first failure)."""
    p = np.arange(1, n + 1)
    img = np.empty(n, np.int64)
    pop = _popcounts(n)
    keys = np.empty(1 << n, np.int64)
    ranks = np.zeros(n + 1, np.int64)
    checked = 0
    failures = 0
    first = np.zeros(n, np.int64)
    while True:
        if _is_canonical(p, n, img):
            checked += 1
            _ranks_of(p, n, pop, keys, ranks)
            if not _unimodal(ranks, n):
                if failures == 0:
                    first[:] = p
                failures += 1
        # next permutation in lexicographic order
        i = n - 2
        while i >= 0 and p[i] >= p[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while p[j] <= p[i]:
            j -= 1
        p[i], p[j] = p[j], p[i]
        p[i + 1:] = p[i + 1:][::-1]
    return checked, failures, first


def fast_downset_ranks(p) -> list[int]:
    n = len(p)
    keys = np.empty(1 << n, np.int64)
    ranks = np.zeros(n + 1, np.int64)
    _ranks_of(np.asarray(p, np.int64), n, _popcounts(n), keys, ranks)
    return [int(x) for x in ranks]


def downset_unimodality(max_len: int = 10, sample_len: Optional[int] = 11,
                        samples: int = 2000, seed: int = 0) -> SurveyReport:
    """Every pattern downset of a permutation of length <= max_len, one per
    symmetry class, plus a random sample at ``sample_len``."""
    check_bound("max_len", max_len, MAX_SURVEY_LENGTH)
    report = SurveyReport("downset-unimodality",
                          {"max_len": max_len, "sample_len": sample_len, "samples": samples,
                           "seed": seed}, 0)
    for n in range(1, max_len + 1):
        checked, failures, first = _scan_all(n)
        report.checked += int(checked)
        if failures:
            p = tuple(int(x) for x in first)
            report.counterexamples.append({"perm": list(p), "ranks": downset_ranks(p),
                                           "failures_at_length": int(failures)})
    if sample_len:
        check_bound("sample_len", sample_len, MAX_SURVEY_LENGTH)
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            p = tuple(int(x) + 1 for x in rng.permutation(sample_len))
            ranks = fast_downset_ranks(p)
            report.checked += 1
            if not is_unimodal(ranks):
                report.counterexamples.append({"perm": list(p), "ranks": downset_ranks(p)})
    return report


# -- compositions under the subword order --------------------------------


@numba.njit(cache=True)
def _subword_ranks_nb(w, ell, total, nxt, ways):
    for a in range(total + 2):
        nxt[ell, a] = ell
    for p in range(ell - 1, -1, -1):
        for a in range(1, total + 1):
            nxt[p, a] = p if w[p] >= a else nxt[p + 1, a]
    for p in range(ell, -1, -1):
        ways[p, 0] = 1
        for s in range(1, total + 1):
            acc = 0
            if p < ell:
                for a in range(1, s + 1):
                    q = nxt[p, a]
                    if q < ell:
                        acc += ways[q + 1, s - a]
            ways[p, s] = acc


@numba.njit(cache=True)
def _scan_compositions(total):
    """All compositions of ``total``: (checked, failures, first failure as a
    bitmask of cut points)."""
    w = np.zeros(total, np.int64)
    nxt = np.zeros((total + 1, total + 2), np.int64)
    ways = np.zeros((total + 1, total + 1), np.int64)
    failures = 0
    first = -1
    count = 1 << (total - 1)
    for cuts in range(count):
        ell = 0
        run = 1
        for b in range(total - 1):
            if (cuts >> b) & 1:
                w[ell] = run
                ell += 1
                run = 1
            else:
                run += 1
        w[ell] = run
        ell += 1
        _subword_ranks_nb(w, ell, total, nxt, ways)
        if not _unimodal(ways[0], total):
            if failures == 0:
                first = cuts
            failures += 1
    return count, failures, first


def _composition_from_cuts(total: int, cuts: int) -> tuple[int, ...]:
    parts, run = [], 1
    for b in range(total - 1):
        if cuts >> b & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    return tuple(parts + [run])


def composition_subword(max_sum: int = 18) -> SurveyReport:
    """Rank-unimodality of the subword-order downset of every composition of
    each sum up to max_sum (equivalently, of every layered permutation)."""
    check_bound("max_sum", max_sum, MAX_SURVEY_SUM)
    report = SurveyReport("composition-subword", {"max_sum": max_sum}, 0)
    for total in range(1, max_sum + 1):
        checked, failures, first = _scan_compositions(total)
        report.checked += int(checked)
        if failures:
            w = _composition_from_cuts(total, int(first))
            report.counterexamples.append({"composition": list(w),
                                           "ranks": comp_downset_rank(w)})
    return report


# -- G_n(-1) --------------------------------------------------------------


def gn_minus_one(max_n: int = 10) -> SurveyReport:
    """G_n(-1) = 0 for odd n is a theorem and counts as a counterexample if
    violated; the sign (-1)^{n/2} for even n is only reported."""
    check_bound("max_n", max_n, MAX_SURVEY_GN)
    report = SurveyReport("gn-minus-one", {"max_n": max_n}, 0)
    values = {}
    for n in range(1, max_n + 1):
        v = evaluate(g_polynomial_123(n), -1)
        values[n] = v
        report.checked += 1
        if n % 2 and v != 0:
            report.counterexamples.append({"n": n, "G(-1)": v})
        if n % 2 == 0:
            expected = (-1) ** (n // 2)
            sign = (v > 0) - (v < 0)
            report.notes.append({"n": n, "G(-1)": v, "sign_matches": sign == expected})
    return report


SURVEYS = {
    "downset-unimodality": downset_unimodality,
    "composition-subword": composition_subword,
    "gn-minus-one": gn_minus_one,
}
