"""Brute-force adjacency in the partition graph, used to check the degree formula."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .degree import degree
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class NeighborSet:
    source: Partition
    neighbors: frozenset

    def __len__(self):
        return len(self.neighbors)


def _move(counts: dict[int, int], donor: int, receiver: int) -> Partition:
    c = dict(counts)
    for size, delta in ((donor, -1), (donor - 1, 1), (receiver, -1), (receiver + 1, 1)):
        if size == 0:
            continue
        c[size] = c.get(size, 0) + delta
    return Partition._trusted(
        sum(counts[s] * s for s in counts),
        tuple(sorted(((s, m) for s, m in c.items() if m), reverse=True)),
    )


def neighbors(lam: Partition) -> NeighborSet:
    """All partitions reachable by moving one unit from one part to another.

    The donor part may vanish, and the unit may start a new part of size 1.
    Moves that reproduce ``lam`` are dropped.
    """
    counts = dict(lam.blocks)
    sizes = list(counts)
    out = set()
    for donor in sizes:
        # receiver 0 stands for creating a new part
        for receiver in sizes + [0]:
            if receiver == donor and counts[donor] < 2:
                continue
            if receiver == donor - 1:
                continue
            out.add(_move(counts, donor, receiver))
    out.discard(lam)
    return NeighborSet(lam, frozenset(out))


def brute_degree(lam: Partition) -> int:
    return len(neighbors(lam).neighbors)


@dataclass
class VerificationReport:
    n_max: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_degree_formula(n_max: int) -> VerificationReport:
    """Compare the closed form with brute-force neighbor counts for every n <= n_max.

    Mismatches are collected as ``(n, parts, formula, brute)`` tuples rather
    than raised.
    """
    report = VerificationReport(n_max)
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        for lam in enumerate_partitions(n):
            report.checked += 1
            formula, brute = degree(lam), brute_degree(lam)
            if formula != brute:
                report.mismatches.append((n, lam.parts, formula, brute))
        report.timings[n] = time.perf_counter() - start
    return report
