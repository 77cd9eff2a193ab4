"""Ferrers boards and full rook placements with pattern avoidance.

Boards are drawn with columns left to right and rows bottom to top.  A shape
is given by its weakly decreasing column heights, so the board is closed
under moving south-west.  A full rook placement (frp) of an n-column shape
puts one rook in every row and column, inside the board.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .classes import ClassSpec, count_av
from .errors import InadmissibleShape, check_bound
from .perm import Perm, _search, direct_sum, standardize

MAX_FRP_ENUM = 9
MAX_PROBE_COLUMNS = 8


@dataclass(frozen=True)
class FerrersShape:
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.heights)
        object.__setattr__(self, "heights", h)
        if any(x < 1 for x in h) or any(h[i] < h[i + 1] for i in range(len(h) - 1)):
            raise InadmissibleShape(f"heights must be positive and weakly decreasing: {h}")

    @property
    def n(self) -> int:
        return len(self.heights)

    @property
    def admissible(self) -> bool:
        n = self.n
        return all(n - i <= h <= n for i, h in enumerate(self.heights))

    def require_admissible(self) -> None:
        if not self.admissible:
            raise InadmissibleShape(f"shape {self} has no full rook placement")

    @classmethod
    def square(cls, n: int) -> FerrersShape:
        return cls((n,) * n)

    @classmethod
    def parse(cls, text: str) -> FerrersShape:
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    def __str__(self):
        return ",".join(map(str, self.heights))


@dataclass(frozen=True)
class FullRookPlacement:
    shape: FerrersShape
    rows: Perm  # rows[i] is the row of the rook in column i + 1


def admissible_shapes(n: int) -> Iterator[FerrersShape]:
    """All shapes with n columns that admit an frp, in lexicographic order."""
    def rec(i: int, cap: int, acc: list[int]):
        if i == n:
            yield FerrersShape(tuple(acc))
            return
        for h in range(n - i, cap + 1):
            acc.append(h)
            yield from rec(i + 1, h, acc)
            acc.pop()
    if n == 0:
        yield FerrersShape(())
        return
    acc = [n]
    yield from rec(1, n, acc)


def frps(shape: FerrersShape, bound: int = MAX_FRP_ENUM) -> list[FullRookPlacement]:
    shape.require_admissible()
    check_bound("n", shape.n, bound)
    out = []
    used = [False] * (shape.n + 1)
    rows: list[int] = []

    def rec(c: int):
        if c == shape.n:
            out.append(FullRookPlacement(shape, tuple(rows)))
            return
        for r in range(1, shape.heights[c] + 1):
            if not used[r]:
                used[r] = True
                rows.append(r)
                rec(c + 1)
                rows.pop()
                used[r] = False

    rec(0)
    return out


def frp_contains(placement: FullRookPlacement, sigma: Perm) -> bool:
    """Some columns carry rooks order-isomorphic to ``sigma`` and the square
    they span fits in the board; by SW-closure it is enough that the highest
    chosen row lies under the last chosen column's height."""
    k = len(sigma)
    if k == 0:
        return True
    rows, heights = placement.rows, placement.shape.heights
    for last in range(k - 1, len(rows)):
        if _ends_at(sigma, rows, heights[last], last):
            return True
    return False


def _ends_at(sigma: Perm, rows: Sequence[int], height: int, last: int) -> bool:
    # rooks before ``last`` that lie under ``height``, then the rook at ``last``
    host = [r for r in rows[:last] if r <= height]
    host.append(rows[last])
    return _search(sigma, host, len(sigma) - 1, len(host) - 1)


def count_avoiding_frps(shape: FerrersShape, beta: Perm) -> int:
    """Number of frps of ``shape`` avoiding ``beta``, by column backtracking.

    Every occurrence is caught when its last column is placed."""
    shape.require_admissible()
    n, heights = shape.n, shape.heights
    if len(beta) == 0:
        return 0
    used = [False] * (n + 1)
    rows: list[int] = []

    def rec(c: int) -> int:
        if c == n:
            return 1
        total = 0
        for r in range(1, heights[c] + 1):
            if used[r]:
                continue
            rows.append(r)
            if not (c + 1 >= len(beta) and _ends_at(beta, rows, heights[c], c)):
                used[r] = True
                total += rec(c + 1)
                used[r] = False
            rows.pop()
        return total

    return rec(0)


@dataclass(frozen=True)
class ShapeWilfProbe:
    equivalent_so_far: bool
    separating_shape: Optional[FerrersShape] = None
    counts: Optional[tuple[int, int]] = None
    shapes_checked: int = 0


def shape_wilf_probe(beta: Perm, gamma: Perm, n_max: int) -> ShapeWilfProbe:
    """Compare avoiding-frp counts on every admissible shape with at most n_max columns."""
    check_bound("n_max", n_max, MAX_PROBE_COLUMNS)
    checked = 0
    for n in range(1, n_max + 1):
        for shape in admissible_shapes(n):
            checked += 1
            a = count_avoiding_frps(shape, beta)
            b = a if beta == gamma else count_avoiding_frps(shape, gamma)
            if a != b:
                return ShapeWilfProbe(False, shape, (a, b), checked)
    return ShapeWilfProbe(True, shapes_checked=checked)


@dataclass(frozen=True)
class Dominance:
    shape: FerrersShape
    count_132: int
    count_321: int
    count_231: int

    @property
    def holds(self) -> bool:
        return self.count_132 >= self.count_321 >= self.count_231


def stankova_dominance(shape: FerrersShape) -> Dominance:
    return Dominance(shape, *(count_avoiding_frps(shape, b) for b in ((1, 3, 2), (3, 2, 1), (2, 3, 1))))


def oplus_one_separator(beta: Perm, gamma: Perm, n_max: int) -> Optional[int]:
    """Least n <= n_max with |Av_n(beta + 1)| != |Av_n(gamma + 1)|."""
    if beta == gamma:
        return None
    a = count_av(ClassSpec(frozenset([direct_sum(beta, (1,))])), n_max)
    b = count_av(ClassSpec(frozenset([direct_sum(gamma, (1,))])), n_max)
    return next((n for n in range(n_max + 1) if a[n] != b[n]), None)


def brute_frp_contains(placement: FullRookPlacement, sigma: Perm) -> bool:
    """Keep k rows and k columns and test whether the kept board is a full
    k x k square whose rooks form ``sigma``."""
    k = len(sigma)
    rows, heights = placement.rows, placement.shape.heights
    for cols in combinations(range(len(rows)), k):
        chosen_rows = {rows[c] for c in cols}
        if all(r <= heights[c] for c in cols for r in chosen_rows) and \
                standardize([rows[c] for c in cols]) == tuple(sigma):
            return True
    return False
