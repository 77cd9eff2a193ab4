"""Permutation classes given by finite bases: enumeration, symmetry classes,
candidate Wilf classes, and codimension counts g_k."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Iterable, Iterator, Optional

from .errors import ClosureViolation, PermlabError, check_bound
from .perm import (
    Perm,
    _search,
    compose,
    contains,
    deletions,
    extensions,
    format_perm,
    parse_perm,
    patterns_of_length,
    symmetry_images,
)

MAX_ENUM_LENGTH = 14
MAX_SYMMETRY_LENGTH = 10


@dataclass(frozen=True)
class ClassSpec:
    """Av(basis).  Non-minimal basis elements are dropped on construction."""

    basis: frozenset[Perm] = field(default_factory=frozenset)

    def __post_init__(self):
        basis = frozenset(tuple(b) for b in self.basis)
        minimal = frozenset(
            b for b in basis
            if not any(c != b and len(c) <= len(b) and contains(c, b) for c in basis))
        object.__setattr__(self, "basis", minimal)

    @classmethod
    def of(cls, *patterns: str | Perm) -> ClassSpec:
        return cls(frozenset(parse_perm(p) if isinstance(p, str) else tuple(p)
                             for p in patterns))

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        """``"2413,3142"`` or ``"Av(2413,3142)"``."""
        text = text.strip()
        if text.lower().startswith("av(") and text.endswith(")"):
            text = text[3:-1]
        return cls.of(*[t for t in text.replace(" ", "").split(",") if t])

    def __contains__(self, p) -> bool:
        return not any(contains(b, p) for b in self.basis)

    def __str__(self):
        return "Av(" + ", ".join(format_perm(b) for b in sorted(self.basis, key=lambda b: (len(b), b))) + ")"


def _anchors(spec: ClassSpec) -> list[tuple[Perm, int, int]]:
    """(pattern, index of its maximum, entries to the right of the maximum)."""
    out = []
    for b in sorted(spec.basis, key=lambda b: (len(b), b)):
        j = b.index(len(b)) if b else -1
        out.append((b, j, len(b) - 1 - j))
    return out


def _children(p: Perm, anchors) -> Iterator[Perm]:
    """Members obtained by inserting a new maximum into member ``p``.

    ``p`` avoids the basis, so any occurrence in a child uses the new entry,
    and it must play the role of the pattern's maximum."""
    n = len(p)
    m = n + 1
    for g in range(m):
        child = p[:g] + (m,) + p[g:]
        for b, j, right in anchors:
            if len(b) <= m and j <= g and right <= n - g and _search(b, child, j, g):
                break
        else:
            yield child


def enumerate_av(spec: ClassSpec, n_max: int, bound: int = MAX_ENUM_LENGTH) -> list[list[Perm]]:
    """Members of Av(B) of each length 0..n_max, grown by inserting a new maximum."""
    check_bound("n_max", n_max, bound)
    if () in spec.basis:
        return [[] for _ in range(n_max + 1)]
    anchors = _anchors(spec)
    levels = [[()]]
    for _ in range(n_max):
        levels.append([c for p in levels[-1] for c in _children(p, anchors)])
    return levels


def count_av(spec: ClassSpec, n_max: int, bound: int = MAX_ENUM_LENGTH) -> list[int]:
    """|Av_n(B)| for n = 0..n_max; the last level is counted without being stored."""
    check_bound("n_max", n_max, bound)
    if n_max == 0:
        return [0 if () in spec.basis else 1]
    levels = enumerate_av(spec, n_max - 1, bound)
    anchors = _anchors(spec)
    last = sum(1 for p in levels[-1] for _ in _children(p, anchors))
    return [len(level) for level in levels] + [last]


def members(spec: ClassSpec, n: int) -> list[Perm]:
    return enumerate_av(spec, n)[n]


# -- symmetry and Wilf classes -------------------------------------------


def symmetry_classes(n: int, bound: int = MAX_SYMMETRY_LENGTH) -> list[list[Perm]]:
    """Orbits of S_n under the eight symmetries of the square, each sorted,
    listed in order of their least element."""
    check_bound("n", n, bound)
    seen: set[Perm] = set()
    orbits = []
    for p in permutations(range(1, n + 1)):
        if p in seen:
            continue
        orbit = symmetry_images(p)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


@dataclass(frozen=True)
class WilfClassification:
    """Symmetry-class representatives grouped by |Av_m(rep)| for m <= depth.

    Agreement through ``depth`` is necessary for Wilf-equivalence but not
    sufficient, so these are candidate classes only."""

    n: int
    depth: int
    classes: tuple[tuple[Perm, ...], ...]
    sequences: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def wilf_classify(n: int, depth: int, workers: int = 1,
                  counter: Optional[Callable[[tuple[Perm, int]], list[int]]] = None) -> WilfClassification:
    """``counter`` maps (representative, depth) to |Av_m(rep)| for m <= depth;
    it must be a module-level function when ``workers > 1``.  Passing one that
    stores its results lets an interrupted run resume."""
    reps = [orbit[0] for orbit in symmetry_classes(n)]
    seqs = parallel_map(counter or count_principal, [(r, depth) for r in reps], workers)
    groups: dict[tuple[int, ...], list[Perm]] = {}
    for rep, seq in zip(reps, seqs):
        groups.setdefault(tuple(seq), []).append(rep)
    ordered = sorted(groups.items(), key=lambda kv: kv[1][0])
    return WilfClassification(
        n=n, depth=depth,
        classes=tuple(tuple(v) for _, v in ordered),
        sequences=tuple(k for k, _ in ordered))


def count_principal(args: tuple[Perm, int]) -> list[int]:
    from .fastcount import count_av_fast  # fastcount imports this module

    beta, depth = args
    return count_av_fast(ClassSpec(frozenset([beta])), depth)


def parallel_map(fn: Callable, items: list, workers: int = 1) -> list:
    """Order-preserving map; worker processes when ``workers > 1``."""
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- codimension counts --------------------------------------------------

MAX_GK_LENGTH = 9


@lru_cache(maxsize=None)
def containing_counts(m: int, k: int) -> dict[Perm, int]:
    """For every pattern of length m, the number of length-(m+k) permutations containing it."""
    check_bound("m+k", m + k, MAX_GK_LENGTH)
    counts: Counter = Counter()
    for p in permutations(range(1, m + k + 1)):
        counts.update(patterns_of_length(p, m))
    return dict(counts)


def g_k(beta: Perm, k: int) -> int:
    return containing_counts(len(beta), k)[tuple(beta)]


class RayWestError(PermlabError):
    pass


def ray_west_j(beta: Perm) -> int:
    """Recover j from g_2(beta) = (m^4 + 2m^3 + m^2 + 4m + 4 - 2j) / 2."""
    m = len(beta)
    twice_j = m ** 4 + 2 * m ** 3 + m ** 2 + 4 * m + 4 - 2 * g_k(beta, 2)
    if twice_j % 2 or not 0 <= twice_j // 2 <= max(m - 1, 0):
        raise RayWestError(f"j={twice_j / 2} outside [0, {m - 1}] for {format_perm(beta)}")
    return twice_j // 2


def ray_west_table(m: int) -> dict[Perm, int]:
    """j for every pattern of length m (data export; no formula is claimed)."""
    return {beta: ray_west_j(beta) for beta in permutations(range(1, m + 1))}


# -- bases of downward-closed sets ---------------------------------------


def minimal_basis(oracle: Callable[[Perm], bool], n_max: int,
                  check_closure: bool = False) -> dict[int, list[Perm]]:
    """Minimal permutations failing ``oracle``, by length, assuming the
    accepted set is closed under taking patterns.

    Each length is grown from one-point extensions of the previous level's
    members, which reaches every basis element."""
    basis: dict[int, list[Perm]] = {}
    if not oracle(()):
        return {0: [()]}
    prev = {()}
    for n in range(1, n_max + 1):
        candidates: set[Perm] = set()
        for p in prev:
            candidates |= extensions(p)
        current = set()
        found = []
        for c in candidates:
            if oracle(c):
                current.add(c)
                if check_closure and not deletions(c) <= prev:
                    raise ClosureViolation(f"{format_perm(c)} accepted but a deletion is not")
            elif deletions(c) <= prev:
                found.append(c)
        basis[n] = sorted(found)
        prev = current
    return basis


def class_compose_members(a: ClassSpec, b: ClassSpec, n: int,
                          bound: int = 10) -> set[Perm]:
    """{alpha o tau : alpha in A_n, tau in B_n}."""
    check_bound("n", n, bound)
    left = members(a, n)
    right = members(b, n)
    return {compose(x, y) for x in left for y in right}


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def principal_counts(patterns: Iterable[Perm], n_max: int) -> dict[Perm, list[int]]:
    return {p: count_av(ClassSpec(frozenset([p])), n_max) for p in patterns}
