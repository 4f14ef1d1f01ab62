"""The recursive family B(n) that contains every h-vector of length n.

B(1) = {(1)}, B(2) = {(1, 1)}, and for n >= 3 every member of B(n-1)
spawns a member of B(n) by appending a 1 (the C-part), and, when its
next-to-last entry exceeds 1 or it has a single entry after the leading 1,
a second member by incrementing its last entry (the D-part).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from hvec.enumeration import iter_h_vectors
from hvec.macaulay import CandidateVector, checked, is_h_vector


def fib(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a, b = 1, 1
    for _ in range(n - 2):
        a, b = b, checked(a + b)
    return b if n > 1 else a


def _wrap(vs):
    # members are valid candidates by construction
    return [tuple.__new__(CandidateVector, v) for v in vs]


@dataclass
class BFamily:
    """B(n) with its C- and D-parts, each in lexicographic order.

    The raw tuples are kept and wrapped as ``CandidateVector`` lazily, so
    that sweeping many n stays cheap.
    """

    n: int
    _c: list[tuple[int, ...]]
    _d: list[tuple[int, ...]]
    _base: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self):
        return len(self._base) + len(self._c) + len(self._d)

    def __contains__(self, v):
        return tuple(v) in self._index

    @cached_property
    def _raw(self) -> list[tuple[int, ...]]:
        # both parts are sorted runs; timsort merges them in linear time
        return sorted(self._base + self._c + self._d)

    @cached_property
    def _index(self):
        return set(self._raw)

    @cached_property
    def members(self) -> list[CandidateVector]:
        return _wrap(self._raw)

    @cached_property
    def c_part(self) -> list[CandidateVector]:
        return _wrap(self._c)

    @cached_property
    def d_part(self) -> list[CandidateVector]:
        return _wrap(self._d)


def _grow(family: BFamily) -> BFamily:
    prev = family._raw
    # appending 1 and bumping the last entry both preserve lexicographic order
    c_part = [v + (1,) for v in prev]
    d_part = [v[:-1] + (v[-1] + 1,) for v in prev if len(v) == 2 or v[-2] > 1]
    return BFamily(family.n + 1, c_part, d_part)


def iter_B(max_n: int):
    """Yield B(1), B(2), ..., B(max_n), each built from its predecessor."""
    if max_n < 1:
        return
    family = BFamily(1, [], [], [(1,)])
    yield family
    if max_n < 2:
        return
    # B(2) is a base case; (1, 1) is recorded as the append-a-1 image of (1)
    family = BFamily(2, [(1, 1)], [])
    yield family
    for _ in range(3, max_n + 1):
        family = _grow(family)
        yield family


def build_B(n: int) -> BFamily:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for family in iter_B(n):
        pass
    return family


def _compositions(total: int, min_part: int):
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in _compositions(total - first, min_part):
            yield (first,) + rest


def characterize_B(n: int) -> set[CandidateVector]:
    """Vectors (1, t_1, ..., t_s) summing to n whose 1-entries form a tail.

    Built directly (a composition into parts >= 2 followed by a run of
    ones), independently of the recursion in ``build_B``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = set()
    for ones in range(n):
        for head in _compositions(n - 1 - ones, 2):
            out.add(CandidateVector((1,) + head + (1,) * ones))
    return out


def check_containment(n: int) -> tuple[bool, list[CandidateVector]]:
    """Return (L(n) is a subset of B(n), members of B(n) that are not h-vectors)."""
    family = build_B(n)
    index = family._index
    holds = all(v in index for v in iter_h_vectors(n))
    witnesses = [m for m in family.members if not is_h_vector(m)]
    return holds, witnesses
