from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from hvec.enumeration import count_Lk, iter_h_vectors
from hvec.macaulay import is_h_vector
from hvec.staircase import (
    Partition,
    Staircase,
    contains_monomial,
    distinct_partitions,
    hilbert_from_staircase,
    is_lex,
    minimal_generators,
    partition_to_staircase,
    render_staircase,
    staircase_to_partition,
)

from oracles import all_partitions, lattice_hilbert, lex_by_shift

GOLDEN = Path(__file__).parent / "golden"


def every_partition(max_weight):
    for n in range(1, max_weight + 1):
        yield from (Partition(p) for p in all_partitions(n))


def test_partition_validation():
    assert Partition((3, 3, 1)).weight == 7
    assert Partition(()).weight == 0
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        partition_to_staircase(Partition(()))


@pytest.mark.parametrize(
    "parts, gens",
    [
        ((3, 3, 1), [(0, 3), (2, 1), (3, 0)]),
        ((5, 4, 2), [(0, 5), (1, 4), (2, 2), (3, 0)]),
        ((1,), [(0, 1), (1, 0)]),
        ((2, 2, 2), [(0, 2), (3, 0)]),
    ],
)
def test_minimal_generators(parts, gens):
    s = partition_to_staircase(Partition(parts))
    assert s.column_heights == parts
    assert staircase_to_partition(s) == parts
    assert minimal_generators(s) == gens


def test_generators_are_minimal_and_generate():
    for p in every_partition(10):
        s = partition_to_staircase(p)
        gens = minimal_generators(s)
        for g in gens:
            others = [h for h in gens if h != g]
            assert not any(h[0] <= g[0] and h[1] <= g[1] for h in others)
        for a in range(s.width + 3):
            for b in range(s.height(0) + 3):
                generated = any(a >= g[0] and b >= g[1] for g in gens)
                assert generated == contains_monomial(s, a, b)


def test_contains_monomial():
    s = Staircase((3, 3, 1))
    assert not contains_monomial(s, 2, 0)
    assert contains_monomial(s, 0, 3)
    assert contains_monomial(Staircase((1,)), 5, 5)
    assert (1, 2) not in s and (2, 1) in s


def test_round_trips():
    for p in every_partition(14):
        assert staircase_to_partition(partition_to_staircase(p)) == p
        s = Staircase(p.parts)
        assert partition_to_staircase(staircase_to_partition(s)) == s


def test_column_heights_form_a_partition_of_the_colength():
    for p in every_partition(14):
        s = Staircase(p.parts)
        parts = staircase_to_partition(s)
        assert list(parts) == sorted(parts, reverse=True)
        assert parts.weight == s.colength == len(list(s.standard_monomials()))


def test_staircase_rejects_increasing_heights():
    with pytest.raises(ValueError):
        Staircase((1, 2))


def test_is_lex_examples():
    assert is_lex(Staircase((5, 4, 2)))
    assert not is_lex(Staircase((3, 3, 1)))
    assert is_lex(Staircase((1,)))


def test_lex_iff_distinct_parts():
    for p in every_partition(14):
        s = partition_to_staircase(p)
        shift = lex_by_shift(lambda a, b: contains_monomial(s, a, b), 20)
        assert is_lex(s) == shift == p.has_distinct_parts()


def test_hilbert_examples():
    assert hilbert_from_staircase(Staircase((5, 4, 2))) == (1, 2, 3, 3, 2)
    assert hilbert_from_staircase(Staircase((3, 3, 1))) == (1, 2, 3, 1)
    assert hilbert_from_staircase(Staircase((1,))) == (1,)
    assert hilbert_from_staircase(Staircase((4,))) == (1, 1, 1, 1)


def test_hilbert_matches_lattice_scan_and_conserves_length():
    for p in every_partition(14):
        h = hilbert_from_staircase(Staircase(p.parts))
        assert h == lattice_hilbert(p.parts)
        assert sum(h) == p.weight
        assert is_h_vector(h)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=12))
def test_hilbert_conservation_random(heights):
    s = Staircase(sorted(heights, reverse=True))
    assert sum(hilbert_from_staircase(s)) == s.colength


def test_distinct_partitions_examples():
    assert distinct_partitions(3, 2) == [(2, 1)]
    assert len(distinct_partitions(7, 2)) == 4
    assert distinct_partitions(1, 2) == []
    assert distinct_partitions(3, 1) == [(3,), (2, 1)]


def test_distinct_partitions_against_brute_force():
    for n in range(1, 21):
        brute = [p for p in all_partitions(n) if len(set(p)) == len(p)]
        assert distinct_partitions(n) == brute
        assert len(distinct_partitions(n, 2)) == len(brute) - 1


def test_lower_bound_bijection():
    for n in range(1, 21):
        images = [hilbert_from_staircase(partition_to_staircase(p)) for p in distinct_partitions(n, 2)]
        l2 = [h for h in iter_h_vectors(n) if len(h) > 1 and h[1] == 2]
        assert sorted(images) == sorted(l2)
        assert len(images) == len(set(images)) == count_Lk(n, 2)


def test_single_part_maps_to_all_ones():
    for n in range(1, 10):
        assert hilbert_from_staircase(partition_to_staircase(Partition((n,)))) == (1,) * n


@pytest.mark.parametrize("parts", [(3, 3, 1), (1,), (5, 4, 2)])
def test_render_golden(parts):
    name = "staircase_" + "_".join(map(str, parts)) + ".txt"
    assert render_staircase(Staircase(parts)) == (GOLDEN / name).read_text()


def test_render_window_and_marks():
    text = render_staircase(Staircase((3, 3, 1)))
    rows = [line for line in text.splitlines() if "|" in line]
    assert len(rows) == 3 + 2
    assert all(len(r.split("|")[1].split()) == 3 + 2 for r in rows)
    assert text.count("*") == 3
    big = render_staircase(Staircase((12, 3)))
    assert big == render_staircase(Staircase((12, 3)))
    assert big.count("*") == 3
