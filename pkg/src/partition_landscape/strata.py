"""Staircases, their perturbations, and the surplus encoding of the top stratum.

A partition with support size t decomposes uniquely as a staircase
``(t, t-1, ..., 1)`` plus gap excesses ``alpha_j = g_j - 1`` and multiplicity
excesses ``mu_i = m_i - 1``.  Its mass is
``T_t + sum(j * alpha_j) + sum(mu_i * L_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .extremal import rho, triangular
from .partitions import DomainError, Partition


@dataclass(frozen=True)
class SurplusData:
    t: int
    alpha: tuple[int, ...]
    mu: tuple[int, ...]

    def sizes(self) -> list[int]:
        """Distinct part sizes L_1 > ... > L_t."""
        sizes = []
        acc = 0
        for i in range(self.t, 0, -1):
            acc += self.alpha[i - 1]
            sizes.append(self.t + 1 - i + acc)
        sizes.reverse()
        return sizes

    @property
    def budget(self) -> int:
        sizes = self.sizes()
        return sum(j * a for j, a in enumerate(self.alpha, 1)) + sum(
            m * size for m, size in zip(self.mu, sizes)
        )


@dataclass(frozen=True)
class PerturbationParams:
    t: int
    a: int = 0
    b: int = 0
    c: int = 0

    def __post_init__(self):
        if self.t < 1 or min(self.a, self.b, self.c) < 0:
            raise DomainError("need t >= 1 and a, b, c >= 0")
        if self.a + self.b > self.t:
            raise DomainError("need a + b <= t")
        if self.a == 0 and self.c != 0:
            raise DomainError("c must be 0 when a is 0")


def staircase(t: int) -> Partition:
    if t < 1:
        raise DomainError("t must be positive")
    return Partition._trusted(triangular(t), tuple((k, 1) for k in range(t, 0, -1)))


def staircase_perturbations(t: int) -> tuple[Partition, Partition, Partition]:
    """The top, bottom and top-and-bottom perturbations of the staircase of size t."""
    if t < 2:
        raise DomainError("perturbations need t >= 2")
    body = list(range(t - 1, 0, -1))
    top = Partition.from_parts([t + 1] + body)
    bot = Partition.from_parts([t] + body + [1])
    tb = Partition.from_parts([t + 1] + body + [1])
    return top, bot, tb


def mixed_perturbation(p: PerturbationParams) -> Partition:
    t, a, b, c = p.t, p.a, p.b, p.c
    blocks = []
    for i in range(1, t + 1):
        size = t + 1 - i + max(a + 1 - i, 0) + (c if i == 1 else 0)
        blocks.append((size, 2 if i > t - b else 1))
    return Partition(blocks)


def extremal_witness(n: int) -> Partition:
    """One partition of n whose degree equals the maximal degree."""
    t = rho(n)
    nu = n - triangular(t)
    if nu == 0:
        return staircase(t)
    q = isqrt(nu)
    if nu < q * (q + 1):
        params = PerturbationParams(t, q, q - 1, nu - q * q)
    else:
        params = PerturbationParams(t, q, q, nu - q * (q + 1))
    return mixed_perturbation(params)


def decode_surplus(d: SurplusData) -> Partition:
    return Partition(zip(d.sizes(), (1 + m for m in d.mu)))


def encode_surplus(lam: Partition) -> SurplusData:
    if not lam.blocks:
        raise DomainError("the empty partition has no surplus encoding")
    sizes = [s for s, _ in lam.blocks]
    alpha = tuple(a - b - 1 for a, b in zip(sizes, sizes[1:] + [0]))
    return SurplusData(len(sizes), alpha, tuple(m - 1 for _, m in lam.blocks))


def _alpha_vectors(t: int, budget: int) -> Iterator[tuple[int, ...]]:
    # all alpha with sum(j * alpha_j) <= budget
    alpha = [0] * t

    def rec(j, left):
        if j > t:
            yield tuple(alpha)
            return
        for a in range(left // j + 1):
            alpha[j - 1] = a
            yield from rec(j + 1, left - j * a)
        alpha[j - 1] = 0

    yield from rec(1, budget)


def _mu_vectors(sizes: list[int], target: int) -> Iterator[tuple[int, ...]]:
    # all mu with sum(mu_i * L_i) == target
    t = len(sizes)
    mu = [0] * t

    def rec(i, left):
        if i == t:
            if left == 0:
                yield tuple(mu)
            return
        for m in range(left // sizes[i] + 1):
            mu[i] = m
            yield from rec(i + 1, left - m * sizes[i])
        mu[i] = 0

    yield from rec(0, target)


def enumerate_max_support_stratum(n: int) -> Iterator[Partition]:
    """Every partition of n with rho(n) distinct part sizes, in descending lex order."""
    t = rho(n)
    nu = n - triangular(t)
    found = []
    for alpha in _alpha_vectors(t, nu):
        probe = SurplusData(t, alpha, (0,) * t)
        sizes = probe.sizes()
        left = nu - probe.budget
        for mu in _mu_vectors(sizes, left):
            found.append(decode_surplus(SurplusData(t, alpha, mu)))
    found.sort(reverse=True)
    return iter(found)
