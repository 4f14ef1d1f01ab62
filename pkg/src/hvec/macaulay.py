"""Macaulay representations, the growth bound a^<d>, and h-vector validation.

All arithmetic is exact and checked against a signed 64-bit range: a result
that would not fit raises ``OverflowError`` instead of silently growing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise ``OverflowError`` if it leaves int64."""
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"integer {value} does not fit in 64 bits")
    return value


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom requires non-negative arguments, got ({n}, {k})")
    return checked(math.comb(n, k))


@dataclass(frozen=True)
class MacaulayRep:
    """The decomposition a = C(b_d, d) + C(b_{d-1}, d-1) + ... + C(b_j, j).

    ``coefficients`` holds (b_d, ..., b_j); the matching lower indices are
    d, d-1, ..., j and are available as ``indices``.
    """

    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if not self.coefficients:
            raise ValueError("a representation has at least one term")
        if len(self.coefficients) > self.degree:
            raise ValueError("more terms than the degree allows")
        for hi, lo in zip(self.coefficients, self.coefficients[1:]):
            if hi <= lo:
                raise ValueError(f"coefficients must strictly decrease: {self.coefficients}")
        if self.coefficients[-1] < self.indices[-1]:
            raise ValueError("trailing coefficient must be at least its index")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.degree, self.degree - len(self.coefficients), -1))

    @property
    def terms(self) -> list[tuple[int, int]]:
        return list(zip(self.coefficients, self.indices))

    @property
    def value(self) -> int:
        return checked(sum(binom(b, i) for b, i in self.terms))


def _scan_start(a: int, i: int) -> int:
    """A b with C(b, i) <= a, close below the greedy choice.

    C(b, i) <= b**i / i!, so any b with b**i <= i! * a qualifies.
    """
    if i == 1:
        return a
    target = math.factorial(i) * a
    b = max(i, int(target ** (1 / i)))
    while b > i and b**i > target:
        b -= 1
    return b


def _greedy(a: int, d: int) -> list[int]:
    coefficients = []
    rest, i = a, d
    while rest > 0:
        b = _scan_start(rest, i)
        while math.comb(b + 1, i) <= rest:
            b += 1
        coefficients.append(b)
        rest -= math.comb(b, i)
        i -= 1
    return coefficients


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy d-th Macaulay representation of a >= 1."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if a < 1:
        raise ValueError(f"macaulay_rep needs a >= 1, got {a}; 0 has no representation")
    return MacaulayRep(d, tuple(_greedy(checked(a), d)))


def macaulay_bound(a: int, d: int) -> int:
    """The Macaulay bound a^<d>, with 0^<d> = 0."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    if a == 0:
        return 0
    coefficients = _greedy(checked(a), d)
    return checked(sum(math.comb(b + 1, i + 1) for b, i in zip(coefficients, range(d, 0, -1))))


def is_valid_growth(current: int, next: int, t: int) -> bool:
    """True iff ``next`` may follow ``current`` in degree t -> t+1."""
    if t < 1:
        raise ValueError(f"growth is only constrained from degree 1 on, got t={t}")
    return next <= macaulay_bound(current, t)


class CandidateVector(tuple):
    """A finite sequence of positive integers starting with 1.

    No growth condition is imposed; members of the Fibonacci family B(n)
    are candidates but need not be h-vectors.
    """

    def __new__(cls, entries: Iterable[int] = (1,)):
        self = super().__new__(cls, (int(e) for e in entries))
        if not self or self[0] != 1:
            raise ValueError(f"vector must start with 1: {tuple(self)}")
        if any(e < 1 for e in self):
            raise ValueError(f"entries must be positive: {tuple(self)}")
        return self

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        """Sum of the entries (the length of the quotient algebra)."""
        return sum(self)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    def __repr__(self):
        return f"{type(self).__name__}{tuple(self)!r}"


class HVector(CandidateVector):
    """A candidate vector that also satisfies Macaulay's growth condition."""

    def __new__(cls, entries: Iterable[int] = (1,)):
        self = super().__new__(cls, entries)
        for t in range(1, len(self) - 1):
            if not is_valid_growth(self[t], self[t + 1], t):
                raise ValueError(
                    f"not an h-vector: h_{t + 1} = {self[t + 1]} exceeds "
                    f"{self[t]}^<{t}> = {macaulay_bound(self[t], t)}"
                )
        return self


def is_h_vector(v: Iterable[int]) -> bool:
    v = tuple(v)
    if not v or v[0] != 1 or any(e < 1 for e in v):
        return False
    return all(is_valid_growth(v[t], v[t + 1], t) for t in range(1, len(v) - 1))
