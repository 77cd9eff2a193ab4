"""Sequences transcribed from the published listings, for regression checks.

Every sequence is indexed from its first listed term; ``offset`` is the
length (or index) of that term."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Reference:
    name: str
    offset: int
    values: tuple
    citation: str

    def at(self, n: int):
        return self.values[n - self.offset]

    def through(self, n: int) -> tuple:
        return self.values[: n - self.offset + 1]


REFERENCES: dict[str, Reference] = {r.name: r for r in [
    Reference("fine", 1, (0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724, 91144),
              "A000957: derangements avoiding 132, 213 or 321, lengths 1.."),
    Reference("A258041", 1, (0, 1, 1, 4, 10, 31, 94, 303, 986, 3284, 11099, 38024),
              "derangements avoiding 231 or 312, lengths 1.."),
    Reference("A318232", 1, (0, 1, 2, 7, 20, 66, 218, 725, 2538, 8646, 31118, 108430),
              "derangements avoiding 123, lengths 1.."),
    Reference("schroder", 1, (1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446),
              "A006318: separable permutations, lengths 1.."),
    Reference("A393394", 1, (0, 1, 2, 7, 30, 124, 560, 2610, 12470, 60955, 302930, 1528621),
              "separable derangements, lengths 1.."),
    Reference("A393395", 1, (1, 2, 6, 24, 116, 628, 3636, 21956, 136428, 865700, 5583580, 36490740),
              "(2,2)-stack sortable permutations, lengths 1.."),
    Reference("A111576", 7, (22, 51, 146, 604),
              "basis elements of two stacks in series, lengths 7.."),
    Reference("A000903", 1, (1, 1, 2, 7, 23, 115, 694),
              "symmetry classes of S_n, n = 1..7"),
    Reference("A099952", 1, (1, 1, 1, 3, 16, 91, 595),
              "Wilf-equivalence classes of single patterns, n = 1..7"),
    Reference("stanton", 0, (1, 1, 2, 3, 5, 6, 9, 11, 15, 17, 21, 23, 27, 28, 31, 30, 31,
                             27, 24, 18, 14, 8, 5, 2, 1),
              "rank sequence of the Young's lattice downset of (8,8,4,4)"),
    Reference("ratio231", 1, ("0", "0.500000000", "0.200000000", "0.285714286", "0.238095238",
                              "0.234848485", "0.219114219", "0.211888112", "0.202797203",
                              "0.195522744"),
              "proportion of derangements in Av(231), lengths 1.."),
    Reference("ratio132", 1, ("0", "0.500000000", "0.400000000", "0.428571429", "0.428571429",
                              "0.431818182", "0.433566434", "0.434965035", "0.436034554",
                              "0.436889736"),
              "proportion of derangements in Av(132), lengths 1.."),
    Reference("ratio123", 1, ("0", "0.500000000", "0.400000000", "0.500000000", "0.476190476",
                              "0.500000000", "0.508158508", "0.506993007", "0.522007404",
                              "0.514765420"),
              "proportion of derangements in Av(123), lengths 1.."),
]}
