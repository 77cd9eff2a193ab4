"""Exact diagnostics on integer sequences: Hankel minors, Stieltjes continued
fractions, ratio profiles and algebraic-equation residuals.

Everything here is exact; floats only appear when ratios are rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .errors import InsufficientTerms


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free elimination with row swaps."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def hankel(seq: Sequence[int], order: int, shift: int = 0) -> list[list[int]]:
    return [[seq[i + j + shift] for j in range(order)] for i in range(order)]


@dataclass(frozen=True)
class HankelReport:
    determinants: tuple[int, ...]
    shifted_determinants: tuple[int, ...]
    first_negative_index: Optional[int]
    first_negative_shifted_index: Optional[int]

    @property
    def any_negative(self) -> bool:
        return self.first_negative_index is not None or self.first_negative_shifted_index is not None


def _first_negative(dets: Sequence[int]) -> Optional[int]:
    return next((k for k, d in enumerate(dets, 1) if d < 0), None)


def hankel_report(seq: Sequence[int], max_order: int) -> HankelReport:
    """Leading principal minors of orders 1..max_order of [a_{i+j}] and, as far
    as the terms allow, of the shifted matrix [a_{i+j+1}]."""
    if len(seq) < 2 * max_order - 1:
        raise InsufficientTerms(f"order {max_order} needs {2 * max_order - 1} terms, got {len(seq)}")
    dets = [bareiss_det(hankel(seq, k)) for k in range(1, max_order + 1)]
    shifted_order = min(max_order, len(seq) // 2)
    shifted = [bareiss_det(hankel(seq, k, 1)) for k in range(1, shifted_order + 1)]
    return HankelReport(tuple(dets), tuple(shifted), _first_negative(dets), _first_negative(shifted))


@dataclass(frozen=True)
class StieltjesCF:
    """alphas[0] / (1 - alphas[1] x / (1 - alphas[2] x / ...)).

    ``breakdown_index`` is the first alpha the quotient-difference table could
    not produce; alphas stop just before it."""

    alphas: tuple[Fraction, ...]
    breakdown_index: Optional[int] = None
    terminated: bool = False

    @property
    def nonnegative(self) -> bool:
        return self.breakdown_index is None and all(a >= 0 for a in self.alphas)

    @property
    def first_negative_index(self) -> Optional[int]:
        return next((i for i, a in enumerate(self.alphas) if a < 0), None)


def stieltjes_cf(seq: Sequence[int]) -> StieltjesCF:
    """S-fraction coefficients by the quotient-difference algorithm.

    With q_1^(n) = c_{n+1}/c_n, e_0^(n) = 0 and
        e_k^(n)     = q_k^(n+1) - q_k^(n) + e_{k-1}^(n+1)
        q_{k+1}^(n) = q_k^(n+1) e_k^(n+1) / e_k^(n),
    the coefficients are alpha_{2k-1} = q_k^(0) and alpha_{2k} = e_k^(0).
    A zero divisor makes the entries depending on it unavailable (None); a
    column that vanishes identically means the fraction is finite."""
    c = [Fraction(v) for v in seq]
    if not c or c[0] == 0:
        raise InsufficientTerms("need a nonzero first term")
    n_terms = len(c)
    alphas: list[Optional[Fraction]] = [c[0]]
    q = [c[i + 1] / c[i] if c[i] != 0 else None for i in range(n_terms - 1)]
    e_prev: list[Optional[Fraction]] = [Fraction(0)] * n_terms
    terminated = False
    while q:
        alphas.append(q[0])
        if all(v == 0 for v in q):
            terminated = True
            break
        e = [None if None in (q[i + 1], q[i], e_prev[i + 1]) else q[i + 1] - q[i] + e_prev[i + 1]
             for i in range(len(q) - 1)]
        if not e:
            break
        alphas.append(e[0])
        if all(v == 0 for v in e):
            terminated = True
            break
        q = [None if None in (q[i + 1], e[i + 1], e[i]) or e[i] == 0 else q[i + 1] * e[i + 1] / e[i]
             for i in range(len(e) - 1)]
        e_prev = e
    if terminated:
        alphas.extend([Fraction(0)] * (n_terms - len(alphas)))
    if None in alphas:
        cut = alphas.index(None)
        return StieltjesCF(tuple(alphas[:cut]), breakdown_index=cut)
    return StieltjesCF(tuple(alphas), terminated=terminated)


def _series_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    inv = [Fraction(0)] * n
    inv[0] = 1 / a[0]
    for k in range(1, n):
        s = sum(a[i] * inv[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        inv[k] = -s / a[0]
    return inv


def cf_series(alphas: Sequence[Fraction], n_terms: int) -> list[Fraction]:
    """Power-series coefficients of the truncated S-fraction, bottom up."""
    tail = [Fraction(1)] + [Fraction(0)] * (n_terms - 1)
    for a in reversed(alphas[1:]):
        denom = [Fraction(1)] + [-a * t for t in tail[: n_terms - 1]]
        tail = _series_inverse(denom, n_terms)
    return [alphas[0] * t for t in tail]


def ratio_profile(numer: Sequence[int], denom: Sequence[int]) -> list[Optional[Fraction]]:
    """numer[n] / denom[n]; ``None`` marks an index with a zero denominator."""
    return [Fraction(a, b) if b != 0 else None for a, b in zip(numer, denom)]


def render_ratio(r: Optional[Fraction], digits: int = 9) -> str:
    return "nan" if r is None else f"{float(r):.{digits}f}"


# -- algebraic equations -------------------------------------------------

BivariatePoly = dict[tuple[int, int], int]
"""{(i, j): c} stands for the sum of c * x^i * f^j."""

TWO_TWO_STACK_POLY: BivariatePoly = {
    (1, 3): 2, (1, 2): -2, (0, 2): -3, (1, 1): -1, (0, 1): 7, (0, 0): -4,
}


@dataclass(frozen=True)
class Residual:
    first_nonzero_degree: Optional[int]
    checked_through: int

    @property
    def vanishes(self) -> bool:
        return self.first_nonzero_degree is None


def _mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def algebraic_residual(poly: BivariatePoly, seq: Sequence[int]) -> Residual:
    """Substitute f = sum seq[n] x^n into ``poly``; report the lowest degree with
    a nonzero coefficient, among the degrees the truncation determines."""
    if not any(poly.values()):
        raise ValueError("zero polynomial")
    n = len(seq)
    if n == 0:
        raise InsufficientTerms("empty sequence")
    f = list(seq)
    top = max(j for (_, j) in poly)
    powers = [[1] + [0] * (n - 1)]
    for _ in range(top):
        powers.append(_mul_trunc(powers[-1], f, n))
    total = [0] * n
    for (i, j), coef in poly.items():
        for d, v in enumerate(powers[j][: n - i]):
            total[d + i] += coef * v
    first = next((d for d, v in enumerate(total) if v != 0), None)
    return Residual(first, n - 1)


# -- Fine numbers --------------------------------------------------------


def fine_catalan_check(fine: Sequence[int], catalan: Sequence[int], n_max: int) -> bool:
    """C_n = 2 F_n + F_{n-1} for 1 <= n <= n_max.

    Both sequences are indexed by length from 0, with F_0 = 1 counting the
    empty permutation as a derangement; the familiar listing 0, 1, 2, 6, ...
    starts at length 1."""
    if len(fine) <= n_max or len(catalan) <= n_max:
        raise InsufficientTerms(f"need terms through index {n_max}")
    return all(catalan[n] == 2 * fine[n] + fine[n - 1] for n in range(1, n_max + 1))


# -- sequence files ------------------------------------------------------


def read_sequence(path: str | Path) -> list[int]:
    """One integer per line, indexed from 0; text after '#' is ignored."""
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(int(line))
    return out


def write_sequence(path: str | Path, seq: Sequence[int], comment: str = "") -> None:
    lines = [f"# {c}" for c in comment.splitlines()] + [str(v) for v in seq]
    Path(path).write_text("\n".join(lines) + "\n")
