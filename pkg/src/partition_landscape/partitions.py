"""Integer partitions in block form: enumeration, counting and conjugation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


@total_ordering
class Partition:
    """A partition of ``n`` stored as ``((L_1, m_1), ..., (L_r, m_r))``.

    Part sizes are strictly decreasing and every multiplicity is positive.
    Ordering and equality follow the flat weakly-decreasing part list, compared
    lexicographically (a proper prefix is the smaller one).
    """

    __slots__ = ("n", "blocks", "_parts")

    def __init__(self, blocks: Iterable[tuple[int, int]] = ()):
        blocks = tuple((int(size), int(mult)) for size, mult in blocks)
        prev = None
        for size, mult in blocks:
            if size <= 0 or mult <= 0:
                raise DomainError(f"block ({size}, {mult}) must have positive size and multiplicity")
            if prev is not None and size >= prev:
                raise DomainError("block sizes must be strictly decreasing")
            prev = size
        self.blocks = blocks
        self.n = sum(size * mult for size, mult in blocks)
        self._parts = None

    @classmethod
    def _trusted(cls, n: int, blocks: tuple[tuple[int, int], ...]) -> "Partition":
        obj = cls.__new__(cls)
        obj.n = n
        obj.blocks = blocks
        obj._parts = None
        return obj

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        counts = Counter(int(p) for p in parts)
        if any(p <= 0 for p in counts):
            raise DomainError("parts must be positive integers")
        return cls(sorted(counts.items(), reverse=True))

    @property
    def parts(self) -> tuple[int, ...]:
        """Flat weakly-decreasing part list."""
        if self._parts is None:
            flat: list[int] = []
            for size, mult in self.blocks:
                flat.extend([size] * mult)
            self._parts = tuple(flat)
        return self._parts

    @property
    def support_size(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return sum(mult for _, mult in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.blocks == other.blocks

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __reduce__(self):
        return (Partition, (self.blocks,))


@dataclass(frozen=True)
class SupportProfile:
    """Ordered support data ``(r, gaps, mults)`` of a nonempty partition."""

    r: int
    gaps: tuple[int, ...]
    mults: tuple[int, ...]

    def to_partition(self) -> Partition:
        sizes = []
        level = 0
        for g in reversed(self.gaps):
            level += g
            sizes.append(level)
        sizes.reverse()
        return Partition(zip(sizes, self.mults))


def _iter_blocks(n: int) -> Iterator[list[list[int]]]:
    """Yield a single mutable block list, rewritten in place for each partition.

    Partitions come out in descending lexicographic order of their flat part
    lists.  Callers must copy the list if they keep it past the next step.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        yield []
        return
    blocks = [[n, 1]]
    while True:
        yield blocks
        rem = 0
        if blocks[-1][0] == 1:
            rem = blocks.pop()[1]
        if not blocks:
            return
        last = blocks[-1]
        size = last[0]
        rem += size
        if last[1] == 1:
            blocks.pop()
        else:
            last[1] -= 1
        k = size - 1
        q, rest = divmod(rem, k)
        blocks.append([k, q])
        if rest:
            blocks.append([rest, 1])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Stream every partition of ``n`` once, in descending lexicographic order."""
    for blocks in _iter_blocks(n):
        yield Partition._trusted(n, tuple((s, m) for s, m in blocks))


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (exact integers)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram."""
    # Column heights are constant between consecutive distinct sizes.
    blocks = []
    height = 0
    sizes = lam.blocks
    for i, (size, mult) in enumerate(sizes):
        height += mult
        below = sizes[i + 1][0] if i + 1 < len(sizes) else 0
        blocks.append((height, size - below))
    blocks.reverse()
    return Partition._trusted(lam.n, tuple(blocks))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == lam


def support_profile(lam: Partition) -> SupportProfile:
    if not lam.blocks:
        raise DomainError("the empty partition has no support profile")
    sizes = [s for s, _ in lam.blocks]
    gaps = tuple(a - b for a, b in zip(sizes, sizes[1:] + [0]))
    return SupportProfile(len(sizes), gaps, tuple(m for _, m in lam.blocks))


def as_partition(value: Partition | Sequence[int]) -> Partition:
    """Accept either a :class:`Partition` or a plain part list."""
    if isinstance(value, Partition):
        return value
    return Partition.from_parts(value)
