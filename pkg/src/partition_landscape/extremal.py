"""Exact maximal degree via triangular numbers and the bonus budget function."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .partitions import DomainError


@dataclass(frozen=True)
class ExtremalContext:
    n: int
    rho: int
    nu: int
    delta: int


def triangular(r: int) -> int:
    return r * (r + 1) // 2


def rho(n: int) -> int:
    """Largest r with T_r <= n."""
    if n < 1:
        raise DomainError("rho is defined for n >= 1")
    return (isqrt(8 * n + 1) - 1) // 2


def min_weight(k: int) -> int:
    """Total of the k smallest items of {1, 1, 2, 2, 3, 3, ...}."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    q = (k + 1) // 2
    return q * q if k % 2 else q * (q + 1)


def beta(r: int, s: int) -> int:
    """Largest number of items from {1, 1, ..., r, r} with total weight <= s."""
    if r < 1 or s < 0:
        raise DomainError("beta needs r >= 1 and s >= 0")
    if s >= r * (r + 1):
        return 2 * r
    q = isqrt(s)
    if q >= r:
        return 2 * r - 1
    if q == 0:
        return 0
    return 2 * q - 1 if s < q * (q + 1) else 2 * q


def max_degree(n: int) -> ExtremalContext:
    t = rho(n)
    nu = n - triangular(t)
    return ExtremalContext(n, t, nu, t * (t - 1) + beta(t, nu))


def _is_square_or_pronic(x: int) -> bool:
    q = isqrt(x)
    return q >= 1 and (q * q == x or q * (q + 1) == x)


def delta_increment_is_jump(t: int, nu: int) -> bool:
    """Whether the maximal degree rises between T_t + nu and T_t + nu + 1."""
    if t < 1 or not 0 <= nu < t:
        raise DomainError("need t >= 1 and 0 <= nu < t")
    return _is_square_or_pronic(nu + 1)


def surplus_bounds_hold(n: int) -> bool:
    ctx = max_degree(n)
    b = ctx.delta - ctx.rho * (ctx.rho - 1)
    q = isqrt(ctx.nu)
    lower = 0 if ctx.nu == 0 else 2 * q - 1
    return lower <= b <= 2 * q and 2 * ctx.rho <= 2 * n - ctx.delta <= 4 * ctx.rho
