"""Sorting and generating machines: greedy stack sorting, stacks in series
(plain and ordered), (r,s)-stacks, C-machines with s-pop, and priority queues.

Stack-based searches memoize on standardized states, since stacks only ever
compare entries through their relative order.  Stacks are tuples with the
top entry last.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .classes import ClassSpec
from .errors import BudgetExceeded
from .perm import (
    Perm, _search, complement, identity, inflate, occurrences, reverse, skew_sum,
)

DEFAULT_BUDGET = 2_000_000

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


# -- greedy (West) stack sorting -----------------------------------------


def greedy_stack_sort(p: Sequence[int]) -> Perm:
    out: list[int] = []
    stack: list[int] = []
    for x in p:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    out.extend(reversed(stack))
    return tuple(out)


def west_sortable(p: Perm, t: int) -> bool:
    if t < 1:
        raise ValueError("t must be at least 1")
    q = tuple(p)
    for _ in range(t):
        q = greedy_stack_sort(q)
    return q == identity(len(p))


def avoids_barred_35241(p: Perm) -> bool:
    """Every 3241 occurrence (positions a<b<c<d) has an entry between a and b
    larger than p[c]."""
    n = len(p)
    suffix_min = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(p[i], suffix_min[i + 1])
    for a in range(n):
        gap_max = 0  # max of p[a+1 .. b-1]
        for b in range(a + 1, n):
            if p[b] < p[a]:
                for c in range(b + 1, n - 1):
                    if p[c] > p[a] and gap_max < p[c] and suffix_min[c + 1] < p[b]:
                        return False
            gap_max = max(gap_max, p[b])
    return True


def avoids_barred_35241_slow(p: Perm) -> bool:
    """Reference version straight from the definition."""
    for occ in occurrences((3, 2, 4, 1), p):
        a, b, c, _ = (i - 1 for i in occ)
        if not any(p[e] > p[c] for e in range(a + 1, b)):
            return False
    return True


# -- stacks in series ----------------------------------------------------


def _canon(inp: Sequence[int], stacks: Sequence[Sequence[int]]):
    values = list(inp)
    for s in stacks:
        values.extend(s)
    rank = {v: i for i, v in enumerate(sorted(values), 1)}
    return tuple(rank[v] for v in inp), tuple(tuple(rank[v] for v in s) for s in stacks)


class _Counter:
    def __init__(self, budget: int, what: str):
        self.left = budget
        self.budget = budget
        self.what = what

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(self.budget, self.what)


@dataclass
class SeriesSorter:
    """Decides sortability by ``t`` stacks in series.

    With ``ordered`` every stack must stay increasing from top to bottom;
    otherwise only the last one must (an inversion there reaches the output).
    The memo is kept between calls."""

    t: int
    ordered: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be at least 1")
        self._memo: dict = {}

    def _may_push(self, k: int, stack: tuple[int, ...], x: int) -> bool:
        if not stack or x < stack[-1]:
            return True
        return not (self.ordered or k == self.t - 1)

    def _drain(self, inp, stacks):
        # output the minimum for as long as it is reachable: at the input head
        # or on top of some stack it can be passed straight through to the output
        while True:
            values = list(inp) + [v for s in stacks for v in s]
            if not values:
                return inp, stacks
            low = min(values)
            if inp and inp[0] == low:
                inp = inp[1:]
            else:
                for k, s in enumerate(stacks):
                    if s and s[-1] == low:
                        stacks = stacks[:k] + (s[:-1],) + stacks[k + 1:]
                        break
                else:
                    return inp, stacks

    def _moves(self, inp, stacks):
        if inp and self._may_push(0, stacks[0], inp[0]):
            yield "push 1", inp[1:], (stacks[0] + (inp[0],),) + stacks[1:]
        for k in range(self.t - 1):
            s = stacks[k]
            if s and self._may_push(k + 1, stacks[k + 1], s[-1]):
                moved = stacks[:k] + (s[:-1], stacks[k + 1] + (s[-1],)) + stacks[k + 2:]
                yield f"pop {k + 1} 1", inp, moved

    def _solve(self, inp, stacks, counter: _Counter) -> bool:
        inp, stacks = _canon(*self._drain(inp, stacks))
        if not inp and not any(stacks):
            return True
        key = (inp, stacks)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        counter.tick()
        self._memo[key] = False  # cycles cannot occur, but guard re-entry anyway
        ok = any(self._solve(i, s, counter) for _, i, s in self._moves(inp, stacks))
        self._memo[key] = ok
        return ok

    def sortable(self, p: Perm) -> bool:
        return self._solve(tuple(p), ((),) * self.t, _Counter(self.budget, "series sort"))

    def witness(self, p: Perm) -> Optional[list[str]]:
        """A move list that sorts ``p``, or None.  Moves: "push 1" reads the
        next input onto stack 1, "pop k 1" moves the top of stack k onto
        stack k+1, or to the output when k = t."""
        if not self.sortable(p):
            return None
        moves: list[str] = []
        inp, stacks = tuple(p), ((),) * self.t
        counter = _Counter(self.budget, "series witness")
        while True:
            inp, stacks = self._emit(inp, stacks, moves)
            if not inp and not any(stacks):
                return moves
            for name, i, s in self._moves(inp, stacks):
                if self._solve(i, s, counter):
                    moves.append(name)
                    inp, stacks = i, s
                    break
            else:  # pragma: no cover - sortable() said otherwise
                raise AssertionError("witness search lost its way")

    def _emit(self, inp, stacks, moves):
        # same as _drain, recording the moves that carry the minimum out
        while True:
            values = list(inp) + [v for s in stacks for v in s]
            if not values:
                return inp, stacks
            low = min(values)
            if inp and inp[0] == low:
                inp = inp[1:]
                moves.append("push 1")
                start = 0
            else:
                for k, s in enumerate(stacks):
                    if s and s[-1] == low:
                        stacks = stacks[:k] + (s[:-1],) + stacks[k + 1:]
                        start = k
                        break
                else:
                    return inp, stacks
            moves.extend(f"pop {k + 1} 1" for k in range(start, self.t))


def replay_series(p: Perm, t: int, moves: Sequence[str]) -> Perm:
    """Run a move list on ``p`` and return the output; raises on an illegal move."""
    inp = list(p)
    stacks: list[list[int]] = [[] for _ in range(t)]
    out: list[int] = []
    for move in moves:
        parts = move.split()
        if parts[0] == "push":
            if not inp:
                raise ValueError("push with empty input")
            stacks[0].append(inp.pop(0))
        elif parts[0] == "pop":
            k = int(parts[1]) - 1
            if not stacks[k]:
                raise ValueError(f"pop from empty stack {k + 1}")
            x = stacks[k].pop()
            (out if k == t - 1 else stacks[k + 1]).append(x)
        else:
            raise ValueError(f"unknown move {move!r}")
    return tuple(out)


_SORTERS: dict[tuple[int, bool], SeriesSorter] = {}


def series_sortable(p: Perm, t: int, ordered: bool = False,
                    budget: int = DEFAULT_BUDGET) -> bool:
    key = (t, ordered)
    if key not in _SORTERS:
        _SORTERS[key] = SeriesSorter(t, ordered, budget)
    sorter = _SORTERS[key]
    sorter.budget = budget
    return sorter.sortable(p)


def series_witness(p: Perm, t: int, ordered: bool = False) -> Optional[list[str]]:
    return SeriesSorter(t, ordered).witness(p)


@lru_cache(maxsize=None)
def _series_outputs(t: int, stacks: tuple[tuple[int, ...], ...], r: int) -> frozenset[Perm]:
    # Outputs reachable from standardized stacks holding 1..k with the input
    # k+1..k+r still to come (in increasing order).
    k = sum(len(s) for s in stacks)
    if k == 0 and r == 0:
        return frozenset([()])
    out: set[Perm] = set()
    if r:
        out |= _series_outputs(t, (stacks[0] + (k + 1,),) + stacks[1:], r - 1)
    for j in range(t - 1):
        s = stacks[j]
        if s:
            out |= _series_outputs(t, stacks[:j] + (s[:-1], stacks[j + 1] + (s[-1],)) + stacks[j + 2:], r)
    last = stacks[-1]
    if last:
        x = last[-1]
        rest = stacks[:-1] + (last[:-1],)
        rest = tuple(tuple(v - 1 if v > x else v for v in s) for s in rest)
        for w in _series_outputs(t, rest, r):
            out.add((x,) + tuple(v + 1 if v >= x else v for v in w))
    return frozenset(out)


def series_generated(t: int, n: int) -> frozenset[Perm]:
    """Everything t stacks in series can produce from the input 12...n."""
    return _series_outputs(t, ((),) * t, n)


# -- (r,s)-stacks ----------------------------------------------------------


@dataclass
class RSStackSorter:
    """Push the next input into any of the top r positions; pop any of the top s."""

    r: int
    s: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("r and s must be at least 1")
        self._memo: dict = {}

    def _solve(self, inp: tuple, stack: tuple, counter: _Counter) -> bool:
        # stack[0] is the top; eagerly output the minimum while reachable
        while inp or stack:
            low = min(inp + stack)
            if inp and inp[0] == low:
                inp = inp[1:]
            elif low in stack[: self.s]:
                i = stack.index(low)
                stack = stack[:i] + stack[i + 1:]
            else:
                break
        if not inp and not stack:
            return True
        if not inp:
            return False
        inp, (stack,) = _canon(inp, (stack,))
        key = (inp, stack)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        counter.tick()
        x = inp[0]
        ok = any(self._solve(inp[1:], stack[:i] + (x,) + stack[i:], counter)
                 for i in range(min(self.r, len(stack) + 1)))
        self._memo[key] = ok
        return ok

    def sortable(self, p: Perm) -> bool:
        return self._solve(tuple(p), (), _Counter(self.budget, "(r,s)-stack sort"))


_RS: dict[tuple[int, int], RSStackSorter] = {}


def rs_stack_sortable(p: Perm, r: int, s: int, budget: int = DEFAULT_BUDGET) -> bool:
    if (r, s) not in _RS:
        _RS[r, s] = RSStackSorter(r, s, budget)
    return _RS[r, s].sortable(p)


TWO_TWO_STACK_BASIS = tuple(
    tuple(int(c) for c in w)
    for w in ("23451", "23541", "32451", "32541", "245163", "246153", "425163", "426153"))


# -- C-machines ------------------------------------------------------------


@dataclass(frozen=True)
class CMachine:
    """Container whose contents, read left to right, stay order-isomorphic to
    a member of Av(container_basis); pops take any of the leftmost
    ``pop_width`` entries.  The input is 12...n."""

    container_basis: frozenset[Perm]
    pop_width: int = 1

    @classmethod
    def of(cls, *patterns: str, pop_width: int = 1) -> CMachine:
        return cls(ClassSpec.of(*patterns).basis, pop_width)

    def generated(self, n: int) -> frozenset[Perm]:
        return _c_outputs(self.container_basis, self.pop_width, (), n)

    def generates(self, p: Perm) -> bool:
        return tuple(p) in self.generated(len(p))


@lru_cache(maxsize=None)
def _c_push_ok(basis: frozenset[Perm], container: Perm, g: int) -> bool:
    # container avoids the basis; the new maximum at gap g must not complete a copy
    child = container[:g] + (len(container) + 1,) + container[g:]
    return not any(len(b) <= len(child) and _search(b, child, b.index(len(b)), g) for b in basis)


@lru_cache(maxsize=None)
def _c_outputs(basis: frozenset[Perm], s: int, container: Perm, r: int) -> frozenset[Perm]:
    # container holds 1..k (standardized); inputs k+1..k+r follow in order
    k = len(container)
    if k == 0 and r == 0:
        return frozenset([()])
    out: set[Perm] = set()
    if r:
        for w in _c_outputs(basis, s, container, r - 1):  # bypass
            out.add((k + 1,) + tuple(v + 1 if v > k else v for v in w))
        for g in range(k + 1):  # push
            if _c_push_ok(basis, container, g):
                out |= _c_outputs(basis, s, container[:g] + (k + 1,) + container[g:], r - 1)
    for q in range(min(s, k)):  # pop
        x = container[q]
        rest = tuple(v - 1 if v > x else v for v in container[:q] + container[q + 1:])
        for w in _c_outputs(basis, s, rest, r):
            out.add((x,) + tuple(v + 1 if v >= x else v for v in w))
    return frozenset(out)


def c_machine_generatable(basis: Sequence[Perm], pop_width: int, p: Perm) -> bool:
    return CMachine(ClassSpec(frozenset(basis)).basis, pop_width).generates(p)


def c_machine_class(basis: Sequence[Perm], pop_width: int, n_max: int) -> list[frozenset[Perm]]:
    machine = CMachine(ClassSpec(frozenset(basis)).basis, pop_width)
    return [machine.generated(n) for n in range(n_max + 1)]


def one_skew(basis: Sequence[Perm]) -> list[Perm]:
    """1 (-) B, the basis of the class generated by the Av(B)-machine."""
    return [skew_sum((1,), b) for b in basis]


# -- priority queues -------------------------------------------------------


def bounded_pq_sortable(p: Perm, capacity: int) -> bool:
    """Greedy: pop whenever the queue minimum is the next value wanted."""
    if capacity < 1:
        raise ValueError("capacity must be at least 1")
    held: set[int] = set()
    want = 1
    for x in p:
        if len(held) == capacity:
            return False
        held.add(x)
        while want in held:
            held.remove(want)
            want += 1
    return not held


def pq_outputs(p: Perm) -> set[Perm]:
    """Every output an unbounded priority queue can produce from input ``p``."""
    found: set[Perm] = set()

    def rec(i: int, held: frozenset, out: tuple):
        if i == len(p) and not held:
            found.add(out)
            return
        if i < len(p):
            rec(i + 1, held | {p[i]}, out)
        if held:
            low = min(held)
            rec(i, held - {low}, out + (low,))

    rec(0, frozenset(), ())
    return found


def pq_pairs_count(n: int) -> int:
    return sum(len(pq_outputs(p)) for p in permutations(range(1, n + 1)))


# -- constructions -------------------------------------------------------


def knuth_horizontal(pi: Perm, sigma: Perm, values: Optional[set[int]] = None) -> Perm:
    """First |pi| entries form the complement of pi on the value set
    ``values`` (default: the top |pi| values); the rest form sigma."""
    n = len(pi) + len(sigma)
    if values is None:
        values = set(range(len(sigma) + 1, n + 1))
    high = sorted(values)
    low = sorted(set(range(1, n + 1)) - values)
    if len(high) != len(pi):
        raise ValueError("value set size must equal |pi|")
    return tuple(high[v - 1] for v in complement(pi)) + tuple(low[v - 1] for v in sigma)


def murphy_vertical(pi: Perm, sigma: Perm, positions: Optional[set[int]] = None) -> Perm:
    """The largest |pi| values sit at ``positions`` (1-based; default the
    first |pi|) in the pattern of reversed pi; the rest form sigma."""
    n = len(pi) + len(sigma)
    if positions is None:
        positions = set(range(1, len(pi) + 1))
    if len(positions) != len(pi):
        raise ValueError("position set size must equal |pi|")
    top = iter(v + len(sigma) for v in reverse(pi))
    bottom = iter(sigma)
    return tuple(next(top) if i in positions else next(bottom) for i in range(1, n + 1))


def murphy_unsortable(beta: Perm) -> Perm:
    """beta inflated by |beta| - 1 copies of reversed beta and a final singleton."""
    k = len(beta)
    if k == 0:
        return ()
    out = inflate(beta, [reverse(beta)] * (k - 1) + [(1,)])
    assert len(out) == k * k - k + 1
    return out


def ordered_stack_basis_element(k: int) -> Perm:
    """2 (2k-1) 4 1 6 3 ... (2k) (2k-3), read as 2, 2k-1, then the pairs
    (2i, 2i-3) for i = 2..k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    word = [2, 2 * k - 1]
    for i in range(2, k + 1):
        word += [2 * i, 2 * i - 3]
    return tuple(word)
