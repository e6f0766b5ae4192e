"""Closed-form vertex degree of a partition in the partition graph."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, support_profile


@dataclass(frozen=True)
class DegreeBreakdown:
    support_term: int
    mult_bonus_flags: tuple[bool, ...]
    gap_bonus_flags: tuple[bool, ...]
    degree: int


def _block_degree(blocks) -> int:
    # blocks: sequence of (size, mult) pairs, sizes strictly decreasing
    r = len(blocks)
    d = r * (r - 1)
    prev = 0
    for i in range(r - 1, -1, -1):
        size, mult = blocks[i]
        if mult > 1:
            d += 1
        if size - prev > 1:
            d += 1
        prev = size
    return d


def degree(lam: Partition) -> int:
    """``r(r-1)`` plus one per repeated part size plus one per gap wider than 1.

    The empty partition gets degree 0.
    """
    return _block_degree(lam.blocks)


def degree_subtractive(lam: Partition) -> int:
    """Same value via ``r(r+1)`` minus the inactive bonus slots."""
    if not lam.blocks:
        return 0
    prof = support_profile(lam)
    r = prof.r
    return r * (r + 1) - sum(m == 1 for m in prof.mults) - sum(g == 1 for g in prof.gaps)


def degree_breakdown(lam: Partition) -> DegreeBreakdown:
    if not lam.blocks:
        return DegreeBreakdown(0, (), (), 0)
    prof = support_profile(lam)
    mult_flags = tuple(m > 1 for m in prof.mults)
    gap_flags = tuple(g > 1 for g in prof.gaps)
    support = prof.r * (prof.r - 1)
    return DegreeBreakdown(support, mult_flags, gap_flags, support + sum(mult_flags) + sum(gap_flags))
