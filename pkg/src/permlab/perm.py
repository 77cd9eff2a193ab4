"""Permutations as tuples of the values 1..n, with the usual structural operations.

A permutation is stored in one-line notation: ``p[i - 1]`` is the image of
``i``.  Plain tuples keep hashing and slicing cheap, which matters because
every enumeration in this package builds millions of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

Perm = tuple[int, ...]

EMPTY: Perm = ()


class PermutationError(ValueError):
    pass


def as_perm(values: Iterable[int]) -> Perm:
    """Validate ``values`` as a permutation of 1..n and return it as a tuple."""
    p = tuple(int(v) for v in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise PermutationError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"362957184"`` or ``"10,3,1,..."``; the empty string is the empty permutation."""
    text = text.strip()
    if text in ("", "e", "ε"):
        return EMPTY
    if "," in text or " " in text:
        parts = [t for t in text.replace(",", " ").split() if t]
        return as_perm(int(t) for t in parts)
    return as_perm(int(ch) for ch in text)


def format_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def standardize(seq: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to a sequence of distinct numbers."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def reverse(p: Perm) -> Perm:
    return p[::-1]


def complement(p: Perm) -> Perm:
    m = len(p) + 1
    return tuple(m - v for v in p)


def compose(p: Perm, q: Perm) -> Perm:
    """``(p o q)(i) = p(q(i))``."""
    if len(p) != len(q):
        raise PermutationError(f"cannot compose lengths {len(p)} and {len(q)}")
    return tuple(p[v - 1] for v in q)


def sorting_dual(p: Perm) -> Perm:
    """Reflection of the plot about the anti-diagonal, ``rho o p^-1 o rho``."""
    return inverse(complement(reverse(p)))


SYMMETRIES: dict[str, Callable[[Perm], Perm]] = {
    "identity": lambda p: p,
    "reverse": reverse,
    "complement": complement,
    "inverse": inverse,
    "rotate90": lambda p: inverse(complement(p)),
    "rotate180": lambda p: complement(reverse(p)),
    "rotate270": lambda p: inverse(reverse(p)),
    "antidiagonal": sorting_dual,
}


def apply_symmetry(name: str, p: Perm) -> Perm:
    try:
        return SYMMETRIES[name](p)
    except KeyError:
        raise PermutationError(f"unknown symmetry {name!r}") from None


def symmetry_images(p: Perm) -> set[Perm]:
    return {f(p) for f in SYMMETRIES.values()}


def canonical_rep(p: Perm) -> Perm:
    """Lexicographically least element of the symmetry class of ``p``."""
    return min(symmetry_images(p))


def direct_sum(*perms: Perm) -> Perm:
    out: list[int] = []
    for p in perms:
        shift = len(out)
        out.extend(v + shift for v in p)
    return tuple(out)


def skew_sum(*perms: Perm) -> Perm:
    total = sum(len(p) for p in perms)
    out: list[int] = []
    for p in perms:
        total -= len(p)
        out.extend(v + total for v in p)
    return tuple(out)


def inflate(skeleton: Perm, blocks: Sequence[Perm]) -> Perm:
    """Replace entry ``i`` of ``skeleton`` by an interval copy of ``blocks[i]``."""
    if len(blocks) != len(skeleton):
        raise PermutationError(
            f"inflation needs {len(skeleton)} blocks, got {len(blocks)}")
    if any(len(b) == 0 for b in blocks):
        raise PermutationError("inflation blocks must be nonempty")
    # offset of block i's values = total size of blocks whose skeleton value is smaller
    sizes_by_value = [0] * (len(skeleton) + 1)
    for v, b in zip(skeleton, blocks):
        sizes_by_value[v] = len(b)
    offsets = [0] * (len(skeleton) + 2)
    for v in range(1, len(skeleton) + 1):
        offsets[v + 1] = offsets[v] + sizes_by_value[v]
    out: list[int] = []
    for v, b in zip(skeleton, blocks):
        out.extend(x + offsets[v] for x in b)
    return tuple(out)


# -- containment ---------------------------------------------------------


_BIG = 1 << 62


@lru_cache(maxsize=None)
def _plan(pattern: Perm) -> tuple[tuple[int, int], ...]:
    """For each pattern index j, the earlier indices holding the nearest smaller
    and nearest larger values (-1 when absent).  A candidate host value at
    step j only has to be compared against those two."""
    steps = []
    for j, v in enumerate(pattern):
        lo = hi = -1
        for i in range(j):
            w = pattern[i]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = i
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = i
        steps.append((lo, hi))
    return tuple(steps)


def _search(pattern: Perm, host: Sequence[int], anchor: int = -1,
            at: int = -1) -> bool:
    """Backtracking occurrence search.  With ``anchor >= 0`` the pattern entry
    ``anchor`` is forced onto host position ``at``."""
    k, n = len(pattern), len(host)
    if k == 0:
        return True
    if k > n:
        return False
    plan = _plan(pattern)
    vals = [0] * k
    pos = [0] * k
    j = 0
    h = 0
    while True:
        lo, hi = plan[j]
        low = vals[lo] if lo >= 0 else -_BIG
        high = vals[hi] if hi >= 0 else _BIG
        if anchor == j:
            start, stop = max(h, at), at
        elif anchor > j:
            start, stop = h, min(n - k + j, at - (anchor - j))
        else:
            start, stop = h, n - k + j
        found = -1
        for c in range(start, stop + 1):
            v = host[c]
            if low < v < high:
                found = c
                break
        if found >= 0:
            vals[j] = host[found]
            pos[j] = found
            j += 1
            if j == k:
                return True
            h = found + 1
        else:
            j -= 1
            if j < 0:
                return False
            h = pos[j] + 1


def contains(pattern: Perm, host: Sequence[int]) -> bool:
    """True when some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    return _search(pattern, host)


def contains_at(pattern: Perm, host: Sequence[int], index: int, position: int) -> bool:
    """Containment restricted to occurrences mapping ``pattern[index]`` to ``host[position]``."""
    return _search(pattern, host, index, position)


def avoids(host: Sequence[int], patterns: Iterable[Perm]) -> bool:
    return not any(_search(b, host) for b in patterns)


def occurrences(pattern: Perm, host: Sequence[int]) -> list[tuple[int, ...]]:
    """All occurrences as 1-based index tuples, in lexicographic order."""
    k, n = len(pattern), len(host)
    plan = _plan(pattern)
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        j = len(chosen)
        if j == k:
            found.append(tuple(i + 1 for i in chosen))
            return
        lo, hi = plan[j]
        low = host[chosen[lo]] if lo >= 0 else float("-inf")
        high = host[chosen[hi]] if hi >= 0 else float("inf")
        for c in range(start, n - k + j + 1):
            if low < host[c] < high:
                chosen.append(c)
                extend(c + 1)
                chosen.pop()

    extend(0)
    return found


def patterns_of_length(p: Sequence[int], k: int) -> set[Perm]:
    return {standardize(sub) for sub in combinations(p, k)}


# -- one-point deletions and extensions ----------------------------------


def delete_entry(p: Perm, i: int) -> Perm:
    """Remove the entry at 0-based position ``i`` and standardize."""
    v = p[i]
    return tuple(x - 1 if x > v else x for j, x in enumerate(p) if j != i)


def deletions(p: Perm) -> set[Perm]:
    return {delete_entry(p, i) for i in range(len(p))}


def extensions(p: Perm) -> set[Perm]:
    """Every permutation obtained from ``p`` by inserting one new entry."""
    n = len(p)
    out = set()
    for v in range(1, n + 2):
        bumped = [x + 1 if x >= v else x for x in p]
        for i in range(n + 1):
            out.add(tuple(bumped[:i] + [v] + bumped[i:]))
    return out


def permutations_of_length(n: int) -> Iterator[Perm]:
    from itertools import permutations
    return permutations(range(1, n + 1))


# -- statistics ----------------------------------------------------------


@dataclass(frozen=True)
class EntryStatistics:
    fixed_points: int
    excedances: int
    displacement_set: frozenset[int]
    max_drop: int
    lr_maxima_positions: tuple[int, ...]


def displacement_set(p: Perm) -> frozenset[int]:
    return frozenset(v - i for i, v in enumerate(p, 1))


def fixed_points(p: Perm) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v == i)


def excedances(p: Perm) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v > i)


def max_drop(p: Perm) -> int:
    return max([0] + [i - v for i, v in enumerate(p, 1)])


def lr_maxima_positions(p: Perm) -> tuple[int, ...]:
    out = []
    best = 0
    for i, v in enumerate(p, 1):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def statistics(p: Perm) -> EntryStatistics:
    return EntryStatistics(
        fixed_points=fixed_points(p),
        excedances=excedances(p),
        displacement_set=displacement_set(p),
        max_drop=max_drop(p),
        lr_maxima_positions=lr_maxima_positions(p),
    )


def is_sum_decomposable(p: Perm) -> bool:
    top = 0
    for i, v in enumerate(p[:-1], 1):
        top = max(top, v)
        if top == i:
            return True
    return False


def is_skew_decomposable(p: Perm) -> bool:
    return is_sum_decomposable(complement(p)) if p else False
