"""Per-n degree statistics: histograms, spectra, extremal sets and table rows."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .degree import _block_degree, degree
from .extremal import max_degree
from .partitions import DomainError, Partition, _iter_blocks, conjugate, enumerate_partitions
from .strata import enumerate_max_support_stratum

SELF_CONJUGATE = "self-conjugate"
CONJUGATE_PAIR = "conjugate-pair"


class ConsistencyError(RuntimeError):
    """The closed-form maximal degree disagrees with an enumerated maximum."""


@dataclass(frozen=True)
class LandscapeRow:
    n: int
    rho: int
    nu: int
    delta: int
    m_delta: int
    m_delta_sc: int
    s: int

    FIELDS = ("n", "rho", "nu", "delta", "m_delta", "m_delta_sc", "s")

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f) for f in self.FIELDS)


@dataclass(frozen=True)
class DegreeHistogram:
    n: int
    counts: Mapping[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def dense(self) -> list[tuple[int, int]]:
        """(degree, count) for every degree from the smallest observed to the largest."""
        lo, hi = min(self.counts), max(self.counts)
        return [(d, self.counts.get(d, 0)) for d in range(lo, hi + 1)]


@dataclass(frozen=True)
class ExtremalOrbit:
    representative: Partition
    kind: str
    orbit_size: int


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError("n must be >= 1")


@lru_cache(maxsize=None)
def degree_histogram(n: int) -> DegreeHistogram:
    """Exact number of partitions of n at each degree, by full enumeration."""
    _check_n(n)
    counts = Counter(_block_degree(blocks) for blocks in _iter_blocks(n))
    return DegreeHistogram(n, MappingProxyType(dict(sorted(counts.items()))))


def spectrum(n: int) -> list[int]:
    return sorted(degree_histogram(n).counts)


def max_degree_set(n: int) -> set[Partition]:
    """Maximal-degree partitions of n, found on the maximal-support stratum."""
    _check_n(n)
    delta = max_degree(n).delta
    return {lam for lam in enumerate_max_support_stratum(n) if degree(lam) == delta}


def max_degree_set_full(n: int) -> set[Partition]:
    """Maximal-degree partitions of n by scanning every partition."""
    _check_n(n)
    best, found = -1, set()
    for lam in enumerate_partitions(n):
        d = degree(lam)
        if d > best:
            best, found = d, {lam}
        elif d == best:
            found.add(lam)
    return found


def extremal_orbits(n: int) -> list[ExtremalOrbit]:
    """Conjugation orbits of the extremal set, each keyed by its lex-larger member."""
    reps = {max(lam, conjugate(lam)) for lam in max_degree_set(n)}
    out = []
    for rep in sorted(reps, reverse=True):
        if conjugate(rep) == rep:
            out.append(ExtremalOrbit(rep, SELF_CONJUGATE, 1))
        else:
            out.append(ExtremalOrbit(rep, CONJUGATE_PAIR, 2))
    return out


def landscape_row(n: int) -> LandscapeRow:
    ctx = max_degree(n)
    hist = degree_histogram(n)
    observed = max(hist.counts)
    if observed != ctx.delta:
        raise ConsistencyError(f"n={n}: closed form gives {ctx.delta}, enumeration gives {observed}")
    extremal = max_degree_set(n)
    sc = sum(1 for lam in extremal if conjugate(lam) == lam)
    return LandscapeRow(n, ctx.rho, ctx.nu, ctx.delta, len(extremal), sc, len(hist.counts))


def landscape_rows(n_from: int, n_to: int, jobs: int = 1) -> list[LandscapeRow]:
    """Rows for every n in [n_from, n_to], sorted by n whatever the worker count."""
    ns = list(range(n_from, n_to + 1))
    if jobs <= 1 or len(ns) <= 1:
        return [landscape_row(n) for n in ns]
    # largest n first: they dominate the wall time
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        rows = list(pool.map(landscape_row, reversed(ns)))
    return sorted(rows, key=lambda row: row.n)


def upper_tail(n: int, c: int) -> int:
    """Number of partitions of n within c of the maximal degree."""
    if c < 0:
        raise DomainError("c must be nonnegative")
    cutoff = max_degree(n).delta - c
    return sum(k for d, k in degree_histogram(n).counts.items() if d >= cutoff)
