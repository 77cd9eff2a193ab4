"""Compiled counting of Av(B) by the same insert-a-new-maximum generating tree
as :func:`permlab.classes.count_av`, walked depth first so memory stays O(n).

The pure-Python enumerator remains the reference; this kernel exists for
lengths where storing a level is impractical."""

from __future__ import annotations

import numba
import numpy as np

from .classes import ClassSpec
from .errors import check_bound
from .perm import _plan

MAX_FAST_LENGTH = 16


@numba.njit(cache=True)
def _anchored(pat, k, lo, hi, anchor, host, n, at):
    # iterative backtracking, pattern entry ``anchor`` forced onto host[at]
    big = 1 << 62
    vals = np.zeros(k, np.int64)
    pos = np.zeros(k, np.int64)
    j = 0
    h = 0
    while True:
        low = vals[lo[j]] if lo[j] >= 0 else -big
        high = vals[hi[j]] if hi[j] >= 0 else big
        if anchor == j:
            start = max(h, at)
            stop = at
        elif anchor > j:
            start = h
            stop = min(n - k + j, at - (anchor - j))
        else:
            start = h
            stop = n - k + j
        found = -1
        for c in range(start, stop + 1):
            v = host[c]
            if low < v and v < high:
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


@numba.njit(cache=True)
def _count_tree(pats, lens, los, his, anchors, n_max):
    counts = np.zeros(n_max + 1, np.int64)
    counts[0] = 1
    if n_max == 0:
        return counts
    perms = np.zeros((n_max + 1, n_max), np.int64)
    gap = np.zeros(n_max + 1, np.int64)  # next gap to try at each depth
    d = 0
    while d >= 0:
        if gap[d] > d:
            d -= 1
            continue
        g = gap[d]
        gap[d] += 1
        m = d + 1
        child = perms[d + 1]
        for i in range(g):
            child[i] = perms[d, i]
        child[g] = m
        for i in range(g, d):
            child[i + 1] = perms[d, i]
        ok = True
        for b in range(pats.shape[0]):
            k = lens[b]
            a = anchors[b]
            if k <= m and a <= g and k - 1 - a <= m - 1 - g:
                if _anchored(pats[b], k, los[b], his[b], a, child, m, g):
                    ok = False
                    break
        if ok:
            counts[m] += 1
            if m < n_max:
                d = m
                gap[d] = 0
    return counts


def count_av_fast(spec: ClassSpec, n_max: int, bound: int = MAX_FAST_LENGTH) -> list[int]:
    """|Av_n(B)| for n = 0..n_max."""
    check_bound("n_max", n_max, bound)
    if () in spec.basis:
        return [0] * (n_max + 1)
    basis = sorted(spec.basis, key=lambda b: (len(b), b))
    width = max((len(b) for b in basis), default=1)
    rows = max(len(basis), 1)
    pats = np.zeros((rows, width), np.int64)
    los = np.full((rows, width), -1, np.int64)
    his = np.full((rows, width), -1, np.int64)
    lens = np.full(rows, n_max + 1, np.int64)  # an absent basis never fires
    anchors = np.zeros(rows, np.int64)
    for r, b in enumerate(basis):
        pats[r, : len(b)] = b
        lens[r] = len(b)
        anchors[r] = b.index(len(b))
        for j, (lo, hi) in enumerate(_plan(b)):
            los[r, j], his[r, j] = lo, hi
    return [int(c) for c in _count_tree(pats, lens, los, his, anchors, n_max)]
