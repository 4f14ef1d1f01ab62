"""Integer partitions and (x,y)-primary monomial ideals of k[x, y].

A staircase is stored by its column heights: column i (counting from 0)
holds the monomials x^i y^j with j < heights[i] that lie outside the ideal.
The partition of the colength and the column heights are the same tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from hvec.macaulay import HVector


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, (int(p) for p in parts))
        if any(p < 1 for p in self):
            raise ValueError(f"parts must be positive: {tuple(self)}")
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
        return self

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def has_distinct_parts(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def __repr__(self):
        return f"Partition{tuple(self)!r}"


@dataclass(frozen=True)
class Staircase:
    column_heights: tuple[int, ...]

    def __post_init__(self):
        heights = tuple(self.column_heights)
        object.__setattr__(self, "column_heights", heights)
        if any(h < 1 for h in heights):
            raise ValueError(f"column heights must be positive: {heights}")
        if any(a < b for a, b in zip(heights, heights[1:])):
            raise ValueError(f"column heights must be weakly decreasing: {heights}")

    @property
    def width(self) -> int:
        """Exponent of the pure power of x among the generators."""
        return len(self.column_heights)

    @property
    def colength(self) -> int:
        return sum(self.column_heights)

    def height(self, a: int) -> int:
        return self.column_heights[a] if 0 <= a < self.width else 0

    def __contains__(self, monomial: tuple[int, int]) -> bool:
        a, b = monomial
        return contains_monomial(self, a, b)

    def standard_monomials(self) -> Iterator[tuple[int, int]]:
        for a, h in enumerate(self.column_heights):
            for b in range(h):
                yield a, b


def partition_to_staircase(p: Partition) -> Staircase:
    p = Partition(p)
    if not p:
        raise ValueError("the empty partition has no (x,y)-primary staircase")
    return Staircase(p.parts)


def staircase_to_partition(s: Staircase) -> Partition:
    return Partition(s.column_heights)


def minimal_generators(s: Staircase) -> list[tuple[int, int]]:
    """Corners of the staircase as (x-exponent, y-exponent), ending with x^t."""
    h = s.column_heights
    gens = [(a, h[a]) for a in range(len(h)) if a == 0 or h[a] < h[a - 1]]
    gens.append((len(h), 0))
    return gens


def contains_monomial(s: Staircase, a: int, b: int) -> bool:
    if a < 0 or b < 0:
        raise ValueError(f"exponents must be non-negative, got ({a}, {b})")
    return a >= s.width or b >= s.column_heights[a]


def is_lex(s: Staircase) -> bool:
    """Lex ideals of k[x, y] are exactly the strictly decreasing staircases."""
    h = s.column_heights
    return all(a > b for a, b in zip(h, h[1:]))


def hilbert_from_staircase(s: Staircase) -> HVector:
    """Count standard monomials on each antidiagonal a + b = j."""
    if not s.column_heights:
        raise ValueError("the unit ideal has no h-vector")
    top = max(a + h - 1 for a, h in enumerate(s.column_heights))
    counts = [0] * (top + 1)
    for a, h in enumerate(s.column_heights):
        for j in range(a, a + h):
            counts[j] += 1
    return HVector(counts)


def distinct_partitions(n: int, min_parts: int = 0) -> list[Partition]:
    """Partitions of n into strictly decreasing parts, at least ``min_parts`` of them.

    Ordered lexicographically descending, so (n) comes first when allowed.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first - 1):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n) if len(p) >= min_parts]


def render_staircase(s: Staircase) -> str:
    """Monospace picture of the exponent lattice.

    ``#`` marks a monomial in the ideal, ``*`` a minimal generator, ``.``
    a standard monomial. The window spans exponents 0..t+1 in x and
    0..h_1+1 in y, so both pure powers show with one cell of margin.
    """
    gens = set(minimal_generators(s))
    cols = s.width + 2
    rows = s.height(0) + 2
    cell = len(str(max(cols, rows) - 1))
    label = len(str(rows - 1))
    lines = [" " * label + "  y"]
    for b in range(rows - 1, -1, -1):
        marks = []
        for a in range(cols):
            if (a, b) in gens:
                marks.append("*")
            elif contains_monomial(s, a, b):
                marks.append("#")
            else:
                marks.append(".")
        lines.append(f"{b:>{label}} | " + " ".join(m.rjust(cell) for m in marks))
    lines.append(" " * label + " +" + "-" * (cols * (cell + 1)) + " x")
    lines.append(" " * label + "   " + " ".join(str(a).rjust(cell) for a in range(cols)))
    return "\n".join(lines) + "\n"
