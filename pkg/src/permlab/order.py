"""Principal downsets and intervals in the pattern order, compositions under
the subword and componentwise orders, Young's lattice downsets, and shape
predicates (unimodal, log-concave, log-convex) on rank sequences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .errors import NotComparable, NotLayered, check_bound
from .perm import Perm, contains, decreasing, delete_entry, direct_sum

MAX_DOWNSET_LENGTH = 20
MAX_COMPOSITION_SUM = 34
MAX_PARTITION_CELLS = 60

Order = Literal["subword", "componentwise"]


# -- integer polynomials (coefficient lists, ascending degree) -----------


def poly_trim(p: Sequence[int]) -> list[int]:
    out = list(p)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


def poly_add(p: Sequence[int], q: Sequence[int]) -> list[int]:
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


# -- pattern downsets ----------------------------------------------------


def pattern_downset(p: Perm, bound: int = MAX_DOWNSET_LENGTH) -> dict[int, set[Perm]]:
    """All patterns of ``p`` by length, built one deletion level at a time."""
    check_bound("|pi|", len(p), bound)
    levels = {len(p): {tuple(p)}}
    for k in range(len(p), 0, -1):
        levels[k - 1] = {delete_entry(q, i) for q in levels[k] for i in range(k)}
    return levels


def downset_ranks(p: Perm, bound: int = MAX_DOWNSET_LENGTH) -> list[int]:
    levels = pattern_downset(p, bound)
    return [len(levels[k]) for k in range(len(p) + 1)]


def interval_rank_sequence(sigma: Perm, pi: Perm) -> list[int]:
    """Sizes of the ranks |sigma|..|pi| of the interval [sigma, pi]."""
    if not contains(sigma, pi):
        raise NotComparable(f"{sigma} is not contained in {pi}")
    levels = pattern_downset(pi)
    return [sum(1 for t in levels[k] if contains(sigma, t))
            for k in range(len(sigma), len(pi) + 1)]


# -- shape predicates ----------------------------------------------------


@dataclass(frozen=True)
class ShapeProfile:
    unimodal: bool
    log_concave: bool
    log_convex_from_1: bool
    first_half_increasing: bool


def is_unimodal(seq: Sequence[int]) -> bool:
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1


def is_log_concave(seq: Sequence[int]) -> bool:
    """a_k^2 >= a_{k-1} a_{k+1} on the positive support, which must be contiguous."""
    support = [i for i, a in enumerate(seq) if a > 0]
    if not support:
        return True
    a = seq[support[0]: support[-1] + 1]
    if any(x <= 0 for x in a):
        return False
    return all(a[k] * a[k] >= a[k - 1] * a[k + 1] for k in range(1, len(a) - 1))


def is_log_convex(seq: Sequence[int]) -> bool:
    return all(seq[n] * seq[n] <= seq[n - 1] * seq[n + 1] for n in range(1, len(seq) - 1))


def first_half_increasing(seq: Sequence[int]) -> bool:
    """Weakly increasing from rank 0 through the middle rank floor((len - 1) / 2)."""
    mid = (len(seq) - 1) // 2
    return all(seq[k] <= seq[k + 1] for k in range(mid))


def shape_profile(seq: Sequence[int]) -> ShapeProfile:
    if any(a < 0 for a in seq):
        raise ValueError("shape predicates need nonnegative entries")
    return ShapeProfile(
        unimodal=is_unimodal(seq),
        log_concave=is_log_concave(seq),
        log_convex_from_1=is_log_convex(seq),
        first_half_increasing=first_half_increasing(seq),
    )


# -- compositions --------------------------------------------------------


def comp_contains(u: Sequence[int], w: Sequence[int], order: Order = "subword") -> bool:
    if order == "componentwise":
        return len(u) <= len(w) and all(a <= b for a, b in zip(u, w))
    i = 0
    for a in u:  # leftmost greedy embedding
        while i < len(w) and w[i] < a:
            i += 1
        if i == len(w):
            return False
        i += 1
    return True


def comp_downset_rank(w: Sequence[int], order: Order = "subword",
                      bound: int = MAX_COMPOSITION_SUM) -> list[int]:
    """Number of compositions u <= w, by the sum of u (ranks 0..sum(w))."""
    w = tuple(w)
    check_bound("sum(w)", sum(w), bound)
    if order == "componentwise":
        # sum over k of prod_{i<=k} (x + ... + x^{w(i)})
        total = [1]
        prefix = [1]
        for part in w:
            prefix = poly_mul(prefix, [0] + [1] * part)
            total = poly_add(total, prefix)
        return total
    if order != "subword":
        raise ValueError(f"unknown order {order!r}")
    return _subword_ranks(w)


def _subword_ranks(w: tuple[int, ...]) -> list[int]:
    # Every u <= w has a unique leftmost greedy embedding, so count greedy
    # paths: ways[p][s] = number of u of sum s embeddable after position p.
    total = sum(w)
    ell = len(w)
    nxt = [[ell] * (total + 2) for _ in range(ell + 1)]
    for p in range(ell - 1, -1, -1):
        for a in range(1, total + 1):
            nxt[p][a] = p if w[p] >= a else nxt[p + 1][a]
    ways = [[0] * (total + 1) for _ in range(ell + 1)]
    for p in range(ell, -1, -1):
        row = ways[p]
        row[0] = 1
        for s in range(1, total + 1):
            acc = 0
            for a in range(1, s + 1):
                q = nxt[p][a] if p < ell else ell
                if q < ell:
                    acc += ways[q + 1][s - a]
            row[s] = acc
    return ways[0]


def sagan_polynomial(w: Sequence[int]) -> list[int]:
    """f_w = 1 + (x + ... + x^{w(1)}) f_{w(2)...w(l)}, with f_empty = 1."""
    f = [1]
    for part in reversed(tuple(w)):
        f = poly_add([1], poly_mul([0] + [1] * part, f))
    return f


def layered_perm(c: Sequence[int]) -> Perm:
    if any(part < 1 for part in c):
        raise ValueError(f"composition parts must be positive: {c}")
    return direct_sum(*(decreasing(part) for part in c))


def layered_composition(p: Perm) -> tuple[int, ...]:
    """Inverse of :func:`layered_perm`."""
    parts = []
    start = 0
    top = 0
    for i, v in enumerate(p):
        top = max(top, v)
        if top == i + 1:
            block = p[start: i + 1]
            if list(block) != list(range(i + 1, start, -1)):
                raise NotLayered(f"{p} is not layered")
            parts.append(i + 1 - start)
            start = i + 1
    return tuple(parts)


# -- Young's lattice -----------------------------------------------------


def partition_downset_rank(lam: Sequence[int], bound: int = MAX_PARTITION_CELLS) -> list[int]:
    """Number of partitions mu inside the diagram of ``lam``, by |mu|."""
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 1 for x in lam):
        raise ValueError(f"not a partition: {lam}")
    check_bound("|lambda|", sum(lam), bound)

    @lru_cache(maxsize=None)
    def rows(i: int, cap: int) -> tuple[int, ...]:
        if i == len(lam) or cap == 0:
            return (1,)
        acc = [0]
        for v in range(min(cap, lam[i]) + 1):
            acc = poly_add(acc, [0] * v + list(rows(i + 1, v)))
        return tuple(acc)

    return list(rows(0, lam[0] if lam else 0))
