"""Predicates on h-vectors and the h-sequence of a predicate.

Unimodality follows the convention that reproduces the published table of
h-sequences: the vector rises strictly to its peak and then never rises
again, e.g. (1, 3, 3, 4) is *not* unimodal. The textbook reading, where
plateaus may precede further growth, is available with ``strict_rise=False``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from hvec.enumeration import iter_h_vectors
from hvec.macaulay import is_h_vector


class PositivePart(enum.Enum):
    FILTER = "filter"  # keep every strictly positive entry, in order
    TRUNCATE = "truncate"  # keep the longest strictly positive prefix


DEFAULT_VARIANT = PositivePart.TRUNCATE


def is_unimodal(h: Sequence[int], strict_rise: bool = True) -> bool:
    i, last = 0, len(h) - 1
    if strict_rise:
        while i < last and h[i] < h[i + 1]:
            i += 1
    else:
        while i < last and h[i] <= h[i + 1]:
            i += 1
    while i < last and h[i] >= h[i + 1]:
        i += 1
    return i == last


def is_symmetric(h: Sequence[int]) -> bool:
    return tuple(h) == tuple(reversed(h))


def first_difference(h: Sequence[int]) -> tuple[int, ...]:
    """(h_0, h_1 - h_0, ..., h_s - h_{s-1})."""
    return (h[0],) + tuple(b - a for a, b in zip(h, h[1:]))


def positive_part(g: Sequence[int], variant: PositivePart = DEFAULT_VARIANT) -> tuple[int, ...]:
    if not g or g[0] != 1:
        raise ValueError(f"a first difference of an h-vector starts with 1, got {tuple(g)}")
    variant = PositivePart(variant)
    if variant is PositivePart.FILTER:
        return tuple(x for x in g if x > 0)
    out = []
    for x in g:
        if x <= 0:
            break
        out.append(x)
    return tuple(out)


def has_wlp(h: Sequence[int], variant: PositivePart = DEFAULT_VARIANT) -> bool:
    """Numerical weak Lefschetz criterion.

    ``h`` must be unimodal and the positive part of its first difference
    must itself be an h-vector.
    """
    return is_unimodal(h) and is_h_vector(positive_part(first_difference(h), variant))


class Kind(enum.Enum):
    ALL = "all"
    UNIMODAL = "unimodal"
    SYMMETRIC = "symmetric"
    WLP = "wlp"
    FIRST_ENTRY = "first-entry"


@dataclass(frozen=True)
class Condition:
    kind: Kind
    k: int | None = None
    variant: PositivePart = DEFAULT_VARIANT

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "variant", PositivePart(self.variant))
        if self.kind is Kind.FIRST_ENTRY:
            if self.k is None or self.k < 1:
                raise ValueError("FirstEntry needs k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} takes no k")

    @classmethod
    def parse(cls, text: str, variant: PositivePart = DEFAULT_VARIANT) -> "Condition":
        """Parse ``all``, ``unimodal``, ``symmetric``, ``wlp`` or ``l<k>`` (h_1 = k)."""
        text = text.strip().lower()
        if text.startswith("l") and text[1:].isdigit():
            return cls(Kind.FIRST_ENTRY, int(text[1:]))
        try:
            kind = Kind(text)
        except ValueError:
            raise ValueError(f"unknown condition {text!r}") from None
        if kind is Kind.FIRST_ENTRY:
            raise ValueError("write a first-entry condition as l<k>, e.g. l2")
        return cls(kind, variant=variant)

    def __call__(self, h: Sequence[int]) -> bool:
        if self.kind is Kind.ALL:
            return True
        if self.kind is Kind.UNIMODAL:
            return is_unimodal(h)
        if self.kind is Kind.SYMMETRIC:
            return is_symmetric(h)
        if self.kind is Kind.WLP:
            return has_wlp(h, self.variant)
        return len(h) > 1 and h[1] == self.k


ALL = Condition(Kind.ALL)
UNIMODAL = Condition(Kind.UNIMODAL)
SYMMETRIC = Condition(Kind.SYMMETRIC)
WLP = Condition(Kind.WLP)


def FirstEntry(k: int) -> Condition:
    return Condition(Kind.FIRST_ENTRY, k)


def h_sequence(c: Condition, n: int) -> int:
    """Number of h-vectors of length n accepted by ``c``."""
    return sum(1 for h in iter_h_vectors(n) if c(h))


def h_sequence_row(conditions: Sequence[Condition], n: int) -> list[int]:
    """Counts for several conditions from a single pass over L(n)."""
    counts = [0] * len(conditions)
    for h in iter_h_vectors(n):
        for i, c in enumerate(conditions):
            if c(h):
                counts[i] += 1
    return counts
