"""Alternating binomial identities behind the extremal count.

Counting lattice points under the all-equal power-of-two shift reduces
to inclusion-exclusion sums over hyperplane slabs. Two facts do the
work: a compositions-count difference that vanishes once the level is
high enough, and a block sum that is independent of its offset
parameter. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binom(a: int, b: int) -> int:
    """Binomial coefficient extended to negative upper index.

    For a >= 0 this is the usual C(a, b). For a < 0 it follows the
    polynomial convention C(a, b) = (-1)^b C(b - a - 1, b), so that
    C(a, b) agrees with the degree-b polynomial a(a-1)...(a-b+1)/b!
    at every integer. Negative b gives 0.
    """
    if b < 0:
        return 0
    if a >= 0:
        if b > a:
            return 0
        return math.comb(a, b)
    return (-1) ** b * math.comb(b - a - 1, b)


def lowered_sum_pair(n: int, big_l: int, l: int) -> tuple[int, int]:
    """Evaluate S(L) = sum_i (-1)^i C(n,i) C(L - i*l, n) at L and L-1.

    The advertised guarantee is S(L) == S(L-1) for L >= n*l, where both
    sums count the same saturated lattice region. Under the polynomial
    binomial convention the sum is an n-th finite difference of a
    degree-n polynomial, hence the constant l^n for every L — the
    stated range is where the counting interpretation applies, not
    where equality starts. Returns the pair (S(L), S(L-1)); n = 0 is
    the induction base where both collapse to C(L, 0) = 1.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if l < 0 or big_l < 0:
        raise ValueError("need nonnegative l and L")

    def s(level: int) -> int:
        return sum(
            (-1) ** i * binom(n, i) * binom(level - i * l, n) for i in range(n + 1)
        )

    return s(big_l), s(big_l - 1)


def inclusion_exclusion_block(n: int, k: int, i: int) -> int:
    """Block sum over slab corrections at offset i.

    sum_{j=0}^{n-1} (-1)^j C(n-1, j) C(n-1 + (n-j) 2^{4k} - i 2^{3k}, n-1)

    For every offset i in [1, 2^k] the value is 2^{4k(n-1)}: each slab
    correction shifts by a full period, so the alternating sum
    telescopes to the count of one fundamental domain, independent
    of i.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if not 1 <= i <= 2**k:
        raise ValueError(f"offset {i} outside [1, 2^{k}]")
    big = 2 ** (4 * k)
    step = 2 ** (3 * k)
    return sum(
        (-1) ** j * binom(n - 1, j) * binom(n - 1 + (n - j) * big - i * step, n - 1)
        for j in range(n)
    )


def total_count(n: int, k: int) -> int:
    """Sum the block over all offsets i = 1..2^k.

    Because each block equals 2^{4k(n-1)}, the total is 2^{k(4n-3)},
    matching max_orthogonal_count. Computed by actually summing, so it
    doubles as a cross-check rather than restating the closed form.
    """
    return sum(inclusion_exclusion_block(n, k, i) for i in range(1, 2**k + 1))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: tuple[int, ...]
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_lowered_sum(n: int, big_l: int, l: int) -> IdentityReport:
    lhs, rhs = lowered_sum_pair(n, big_l, l)
    return IdentityReport("lowered-sum", (n, big_l, l), lhs, rhs)


def check_block(n: int, k: int, i: int) -> IdentityReport:
    return IdentityReport(
        "block-sum", (n, k, i), inclusion_exclusion_block(n, k, i), 2 ** (4 * k * (n - 1))
    )


def check_total(n: int, k: int) -> IdentityReport:
    return IdentityReport(
        "total-count", (n, k), total_count(n, k), 2 ** (k * (4 * n - 3))
    )
