"""Enumerate and count h-vectors of a fixed length.

L(n) is the set of h-vectors whose entries sum to n, and L_k(n) is the part
of it with h_1 = k. The vector (1) has no h_1; it is kept in bucket 0 so
that count_Lk(1, k) = 0 for every k >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from hvec.macaulay import HVector, binom, checked, macaulay_bound


@dataclass
class LengthCensus:
    n: int
    vectors: list[HVector]
    by_first_entry: dict[int, list[HVector]] = field(default_factory=dict)

    def __len__(self):
        return len(self.vectors)

    def count(self, k: int) -> int:
        return len(self.by_first_entry.get(k, []))


def _require_positive(n: int, name: str = "n"):
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def iter_h_vectors(n: int):
    """Yield the h-vectors of length n as tuples, in lexicographic order.

    Depth-first: ascending choices at each step give lexicographic order
    because no vector of the same sum is a prefix of another.
    """
    _require_positive(n)
    vector = [1]

    def extend(remaining):
        if remaining == 0:
            yield tuple(vector)
            return
        t = len(vector) - 1
        top = remaining if t == 0 else min(remaining, macaulay_bound(vector[t], t))
        for m in range(1, top + 1):
            vector.append(m)
            yield from extend(remaining - m)
            vector.pop()

    yield from extend(n - 1)


def enumerate_L(n: int) -> LengthCensus:
    vectors = [HVector(v) for v in iter_h_vectors(n)]
    buckets: dict[int, list[HVector]] = {}
    for v in vectors:
        buckets.setdefault(v[1] if len(v) > 1 else 0, []).append(v)
    return LengthCensus(n, vectors, dict(sorted(buckets.items())))


def _completion_counter():
    # fresh table per top-level call
    @lru_cache(maxsize=None)
    def completions(t: int, last: int, remaining: int) -> int:
        """Ways to finish a vector whose degree-t entry is ``last``."""
        if remaining == 0:
            return 1
        top = min(remaining, macaulay_bound(last, t))
        return checked(sum(completions(t + 1, m, remaining - m) for m in range(1, top + 1)))

    return completions


def count_Lk(n: int, k: int) -> int:
    """Number of h-vectors of length n with h_1 = k."""
    _require_positive(n)
    _require_positive(k, "k")
    if k >= n:
        return 0
    return _completion_counter()(1, k, n - 1 - k)


def count_L(n: int) -> int:
    """ell(n), counted without materializing any vector."""
    _require_positive(n)
    if n == 1:
        return 1
    completions = _completion_counter()
    return checked(sum(completions(1, k, n - 1 - k) for k in range(1, n)))


def s_of(n: int) -> int:
    """Smallest k >= 0 with n <= C(k+2, 2).

    Only n = 1 gives 0; there the tail sum picks up bucket 0, the vector (1).
    """
    _require_positive(n)
    k = 0
    while binom(k + 2, 2) < n:
        k += 1
    return k


def _bucket_size(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 1 else 0
    return count_Lk(n, k)


def tau_direct(n: int) -> int:
    """Sum of ell_k(n) for s(n) <= k <= n-1."""
    _require_positive(n)
    return sum(_bucket_size(n, k) for k in range(s_of(n), n))


def tau_recursive(n: int) -> int:
    """tau(n) from tau(1) = 1 and the two-case recurrence on s(n)."""
    _require_positive(n)
    tau = 1
    for m in range(2, n + 1):
        if s_of(m) == s_of(m - 1):
            tau += _bucket_size(m, s_of(m))
    return tau


def check_shift_identity(n: int, k: int) -> bool:
    """Whether ell_{k+1}(n+1) == ell_k(n); only defined when C(k+2, 2) >= n."""
    _require_positive(n)
    _require_positive(k, "k")
    if binom(k + 2, 2) < n:
        raise ValueError(f"shift identity needs C(k+2, 2) >= n; got n={n}, k={k}")
    return count_Lk(n + 1, k + 1) == count_Lk(n, k)
