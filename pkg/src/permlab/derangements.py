"""Derangements inside permutation classes, fixed point and excedance
statistics, and a displacement-set dynamic program for separable permutations.

Counting sequences here are indexed by length from 0; the empty permutation
has no fixed points, so every class with a nonempty basis has one derangement
of length 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classes import MAX_ENUM_LENGTH, ClassSpec, enumerate_av
from .errors import check_bound
from .perm import excedances, fixed_points
from .sequences import ratio_profile

MAX_SEPARABLE_LENGTH = 14

SEPARABLE = ClassSpec.of("2413", "3142")


def derangement_counts(spec: ClassSpec, n_max: int, bound: int = MAX_ENUM_LENGTH) -> list[int]:
    levels = enumerate_av(spec, n_max, bound)
    return [sum(1 for p in level if fixed_points(p) == 0) for level in levels]


def fix_exc_distribution(spec: ClassSpec, n_max: int,
                         bound: int = MAX_ENUM_LENGTH) -> list[dict[tuple[int, int], int]]:
    """For each length, counts keyed by (fixed points, excedances)."""
    levels = enumerate_av(spec, n_max, bound)
    return [dict(Counter((fixed_points(p), excedances(p)) for p in level)) for level in levels]


def g_polynomial_123(n: int, bound: int = MAX_ENUM_LENGTH) -> list[int]:
    """Coefficients of G_n(t), the excedance polynomial of 123-avoiding derangements."""
    coeffs = [0] * max(n, 1)
    for p in enumerate_av(ClassSpec.of("123"), n, bound)[n]:
        if fixed_points(p) == 0:
            coeffs[excedances(p)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def evaluate(coeffs: list[int], t: int) -> int:
    return sum(c * t ** i for i, c in enumerate(coeffs))


def derangement_proportions(spec: ClassSpec, n_max: int) -> list[Optional[Fraction]]:
    levels = enumerate_av(spec, n_max)
    totals = [len(level) for level in levels]
    return ratio_profile(derangement_counts(spec, n_max), totals)


# -- separable permutations ----------------------------------------------


@dataclass(frozen=True)
class DisplacementProfile:
    """For each length, displacement set -> number of separable permutations,
    for all of them and for the sum- and skew-indecomposable ones."""

    any: tuple[dict[tuple[int, ...], int], ...]
    sum_indecomposable: tuple[dict[tuple[int, ...], int], ...]
    skew_indecomposable: tuple[dict[tuple[int, ...], int], ...]
    totals: tuple[int, ...]
    derangements: tuple[int, ...]


def _convolve(left: dict[int, int], right: dict[int, int], up: int, down: int,
              out: dict[int, int]) -> None:
    """Add the union of (left mask << up) and (right mask >> down) for every pair."""
    for m1, c1 in left.items():
        a = m1 << up
        for m2, c2 in right.items():
            key = a | (m2 >> down)
            out[key] = out.get(key, 0) + c1 * c2


def separable_displacement_dp(n_max: int) -> DisplacementProfile:
    """Every separable permutation of length >= 2 is uniquely alpha + beta with
    alpha sum-indecomposable, or alpha - beta (skew sum) with alpha
    skew-indecomposable.  Displacement sets obey
        D(alpha + beta) = D(alpha) | D(beta)
        D(alpha - beta) = (D(alpha) + |beta|) | (D(beta) - |alpha|).
    Sets are bitmasks with displacement d stored at bit d + offset; lengths
    start at 1."""
    check_bound("n_max", n_max, MAX_SEPARABLE_LENGTH)
    off = n_max
    every: list[dict[int, int]] = [{}]
    sum_ind: list[dict[int, int]] = [{}]
    skew_ind: list[dict[int, int]] = [{}]
    for n in range(1, n_max + 1):
        if n == 1:
            unit = {1 << off: 1}
            every.append(unit)
            sum_ind.append(dict(unit))
            skew_ind.append(dict(unit))
            continue
        sum_dec: dict[int, int] = {}
        skew_dec: dict[int, int] = {}
        for a in range(1, n):
            b = n - a
            _convolve(sum_ind[a], every[b], 0, 0, sum_dec)
            _convolve(skew_ind[a], every[b], b, a, skew_dec)
        total: dict[int, int] = dict(sum_dec)
        for m, c in skew_dec.items():
            total[m] = total.get(m, 0) + c
        every.append(total)
        sum_ind.append(skew_dec)
        skew_ind.append(sum_dec)

    def decode(d: dict[int, int]) -> dict[tuple[int, ...], int]:
        return {tuple(i - off for i in range(m.bit_length()) if m >> i & 1): c
                for m, c in sorted(d.items()) if c}

    zero = 1 << off
    return DisplacementProfile(
        any=tuple(decode(d) for d in every),
        sum_indecomposable=tuple(decode(d) for d in sum_ind),
        skew_indecomposable=tuple(decode(d) for d in skew_ind),
        totals=tuple([1] + [sum(d.values()) for d in every[1:]]),
        derangements=tuple([1] + [sum(c for m, c in d.items() if not m & zero) for d in every[1:]]),
    )
