import pytest

import partition_landscape.landscape as landscape
from partition_landscape import (
    ConsistencyError,
    LandscapeRow,
    Partition,
    conjugate,
    degree,
    degree_histogram,
    enumerate_partitions,
    extremal_orbits,
    landscape_row,
    landscape_rows,
    max_degree,
    max_degree_set,
    max_degree_set_full,
    partition_count,
    spectrum,
    staircase,
    upper_tail,
)

P = Partition.from_parts


def brute_histogram(n):
    counts = {}
    for lam in enumerate_partitions(n):
        d = degree(lam)
        counts[d] = counts.get(d, 0) + 1
    return counts


@pytest.mark.parametrize("n, expected", [(1, {0: 1}), (2, {1: 2}), (3, {1: 2, 2: 1}), (5, {1: 2, 3: 4, 4: 1})])
def test_histogram_examples(n, expected):
    assert dict(degree_histogram(n).counts) == expected


@pytest.mark.parametrize("n", range(1, 26))
def test_histogram_matches_object_path(n):
    hist = degree_histogram(n)
    assert dict(hist.counts) == brute_histogram(n)
    assert hist.total == partition_count(n)
    assert max(hist.counts) == max_degree(n).delta


def test_histogram_is_read_only():
    with pytest.raises(TypeError):
        degree_histogram(4).counts[1] = 0


def test_dense_histogram_zero_fills():
    assert degree_histogram(5).dense() == [(1, 2), (2, 0), (3, 4), (4, 1)]


def test_spectrum_examples():
    assert spectrum(1) == [0]
    assert spectrum(5) == [1, 3, 4]
    s20 = spectrum(20)
    assert len(s20) == 19 and s20[-1] == 23 and s20[0] == 1


def test_max_degree_set_examples():
    assert max_degree_set(15) == {staircase(5)}
    assert max_degree_set(17) == {P([6, 4, 3, 2, 1, 1])}
    s44 = max_degree_set(44)
    assert len(s44) == 22 and sum(conjugate(lam) == lam for lam in s44) == 2


@pytest.mark.parametrize("n", range(1, 41))
def test_stratum_path_matches_full_enumeration(n):
    assert max_degree_set(n) == max_degree_set_full(n)


def test_orbits_n20():
    orbits = extremal_orbits(20)
    assert len(orbits) == 4
    assert all(o.kind == "conjugate-pair" and o.orbit_size == 2 for o in orbits)
    assert orbits[0].representative.parts == (8, 5, 3, 2, 1, 1)


def test_orbits_n27():
    (orbit,) = extremal_orbits(27)
    assert orbit.representative.parts == (8, 6, 4, 3, 2, 2, 1, 1)
    assert (orbit.kind, orbit.orbit_size) == ("self-conjugate", 1)


@pytest.mark.parametrize("n", range(1, 41))
def test_orbit_invariants(n):
    orbits = extremal_orbits(n)
    reps = [o.representative for o in orbits]
    assert reps == sorted(reps, reverse=True)
    assert sum(o.orbit_size for o in orbits) == len(max_degree_set(n))
    for o in orbits:
        conj = conjugate(o.representative)
        assert o.representative >= conj
        assert (o.kind == "self-conjugate") == (o.orbit_size == 1) == (conj == o.representative)


@pytest.mark.parametrize(
    "n, row",
    [(1, (1, 1, 0, 0, 1, 1, 1)), (9, (9, 3, 3, 8, 6, 0, 7)), (53, (53, 9, 8, 76, 22, 2, 56))],
)
def test_landscape_row_examples(n, row):
    assert landscape_row(n).as_tuple() == row


def test_landscape_row_flags_formula_mismatch(monkeypatch):
    from partition_landscape.extremal import ExtremalContext

    monkeypatch.setattr(landscape, "max_degree", lambda n: ExtremalContext(n, 3, 1, 99))
    with pytest.raises(ConsistencyError):
        landscape_row(7)


def test_rows_parallel_matches_serial():
    assert landscape_rows(1, 30, jobs=4) == landscape_rows(1, 30, jobs=1)
    assert [r.n for r in landscape_rows(5, 9, jobs=3)] == [5, 6, 7, 8, 9]


@pytest.mark.parametrize("n", range(1, 41))
def test_row_invariants(n):
    row = landscape_row(n)
    assert isinstance(row, LandscapeRow)
    assert row.m_delta_sc <= row.m_delta
    assert (row.m_delta - row.m_delta_sc) % 2 == 0
    if n >= 2:
        assert 1 <= row.s <= row.delta


def test_upper_tail_examples():
    assert upper_tail(15, 0) == 1
    assert upper_tail(3, 2) == 3 == partition_count(3)


@pytest.mark.parametrize("n", range(1, 31))
def test_upper_tail_monotone(n):
    delta = max_degree(n).delta
    tails = [upper_tail(n, c) for c in range(delta + 2)]
    assert tails[0] == len(max_degree_set(n))
    assert all(a <= b for a, b in zip(tails, tails[1:]))
    assert tails[delta] == tails[-1] == partition_count(n)
