"""Counting and transporting solutions of <u, y> = 0 (mod 2^q).

The frequency vectors orthogonal to the hidden shift carry no signal,
so their number controls how fast recovery concentrates. This module
counts them two independent ways (exhaustive enumeration and a gcd
closed form) and implements the three solution-transport maps used to
reduce an arbitrary shift to the extremal all-equal power-of-two one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .core import DEFAULT_ENUM_CEILING, ResourceCeilingError


@dataclass(frozen=True)
class CountReport:
    u_tilde: tuple[int, ...]
    q: int
    count: int
    method: str  # "brute", "gcd-formula", or "extremal-formula"


def _check_vector(u_tilde: Sequence[int], q: int) -> tuple[int, ...]:
    if q < 1:
        raise ValueError(f"modulus exponent q must be positive, got {q}")
    u = tuple(int(c) for c in u_tilde)
    if not u:
        raise ValueError("shift vector must have at least one coordinate")
    n_pts = 2**q
    for c in u:
        if not 0 <= c < n_pts:
            raise ValueError(f"coordinate {c} outside [0, 2^{q})")
    return u


def solves(y: Sequence[int], u_tilde: Sequence[int], q: int) -> bool:
    """True when <u, y> = 0 (mod 2^q)."""
    return sum(int(a) * int(b) for a, b in zip(u_tilde, y)) % 2**q == 0


def brute_count(
    u_tilde: Sequence[int], q: int, max_enum: int = DEFAULT_ENUM_CEILING
) -> int:
    """Exhaustively count y in Z_{2^q}^n with <u, y> = 0 (mod 2^q)."""
    u = _check_vector(u_tilde, q)
    n_pts = 2**q
    if n_pts ** len(u) > max_enum:
        raise ResourceCeilingError(
            f"2^{q * len(u)} grid points exceed the enumeration ceiling {max_enum}"
        )
    inner = np.zeros((), dtype=np.int64)
    for ui in u:
        inner = np.add.outer(inner, ui * np.arange(n_pts, dtype=np.int64))
    return int(np.count_nonzero(inner % n_pts == 0))


def gcd_count(u_tilde: Sequence[int], q: int) -> int:
    """Closed-form count 2^(q(n-1)) * gcd(2^q, u_1, ..., u_n).

    The inner product map y -> <u, y> mod 2^q is a group homomorphism
    onto the subgroup generated by gcd(2^q, u), whose kernel has the
    stated size. Serves as the independent oracle for brute_count.
    """
    u = _check_vector(u_tilde, q)
    g = math.gcd(2**q, *u)
    return (2**q) ** (len(u) - 1) * g


def max_orthogonal_count(n: int, k: int) -> int:
    """Largest orthogonal count over shifts with coordinates in [1, 2^k].

    Equals 2^(k(4n-3)), attained at the all-equal shift (2^k, ..., 2^k)
    with q = 4k.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return 2 ** (k * (4 * n - 3))


def iter_solutions(
    u_tilde: Sequence[int], q: int, max_enum: int = DEFAULT_ENUM_CEILING
) -> Iterator[tuple[int, ...]]:
    """Yield every solution of <u, y> = 0 (mod 2^q) in lexicographic order."""
    u = _check_vector(u_tilde, q)
    n_pts = 2**q
    n = len(u)
    if n_pts**n > max_enum:
        raise ResourceCeilingError(
            f"2^{q * n} grid points exceed the enumeration ceiling {max_enum}"
        )
    inner = np.zeros((), dtype=np.int64)
    for ui in u:
        inner = np.add.outer(inner, ui * np.arange(n_pts, dtype=np.int64))
    hits = np.argwhere(inner.reshape((n_pts,) * n) % n_pts == 0)
    for row in hits:
        yield tuple(int(v) for v in row)


def _require_solution(y: Sequence[int], u: Sequence[int], q: int) -> tuple[int, ...]:
    yy = tuple(int(v) for v in y)
    if len(yy) != len(u):
        raise ValueError("y and u have different lengths")
    if not solves(yy, u, q):
        raise ValueError(f"{yy} does not solve <{tuple(u)}, y> = 0 (mod 2^{q})")
    return yy


def map_to_doubled(
    y_tilde: Sequence[int], u_tilde: Sequence[int], i: int, q: int
) -> tuple[int, ...]:
    """Transport a solution for u to one for u with coordinate i doubled.

    Requires some other coordinate j with u_j == u_i. Even y_i is
    halved; odd y_i rounds up and decrements the partner coordinate,
    which leaves the inner product unchanged mod 2^q because
    u_i == u_j. Note this map is not injective on solution sets: when
    (2m, b, ...) is a solution so is (2m-1, b+1, ...) and both land on
    (m, b, ...); only the count inequality survives, via gcd_count.
    """
    u = _check_vector(u_tilde, q)
    if not 0 <= i < len(u):
        raise ValueError(f"index {i} out of range")
    partners = [j for j in range(len(u)) if j != i and u[j] == u[i]]
    if not partners:
        raise ValueError(f"no second coordinate equals u[{i}] = {u[i]}")
    j = partners[0]
    y = list(_require_solution(y_tilde, u, q))
    if y[i] % 2 == 0:
        y[i] //= 2
    else:
        y[i] = (y[i] + 1) // 2
        y[j] = (y[j] - 1) % 2**q
    return tuple(y)


def map_to_raised_exponent(
    y_tilde: Sequence[int], u_tilde: Sequence[int], q: int
) -> tuple[int, ...]:
    """Transport a solution for a power-of-two shift to one with the
    smallest exponent raised to the second smallest.

    All coordinates of u must be powers of two below the modulus. With
    t1 <= t2 the two smallest exponents (lowest index first on ties),
    every solution has y_{i1} divisible by 2^(t2-t1), and dividing it
    by that factor preserves the inner product exactly.
    """
    u = _check_vector(u_tilde, q)
    if len(u) < 2:
        raise ValueError("need at least two coordinates to raise an exponent")
    exps = []
    for idx, c in enumerate(u):
        if c <= 0 or c & (c - 1):
            raise ValueError(f"coordinate {c} is not a positive power of two")
        exps.append((c.bit_length() - 1, idx))
    (t1, i1), (t2, _) = sorted(exps)[:2]
    y = list(_require_solution(y_tilde, u, q))
    step = 2 ** (t2 - t1)
    if y[i1] % step:
        raise ValueError(f"y[{i1}] = {y[i1]} is not divisible by {step}; not a solution artifact")
    y[i1] //= step
    return tuple(y)


def map_to_power_of_two(
    y_tilde: Sequence[int], u_tilde: Sequence[int], j: int, q: int
) -> tuple[int, ...]:
    """Transport a solution for u to one for u with the odd factor of
    coordinate j dropped.

    Writing u_j = v * 2^t with odd v > 1, the coordinate map
    y_j -> v * y_j (mod 2^q) is multiplication by a unit, hence a
    bijection of Z_{2^q} that restricts to a bijection between the two
    solution sets, and 2^t * (v y_j) = u_j y_j (mod 2^q) preserves the
    inner product.
    """
    u = _check_vector(u_tilde, q)
    if not 0 <= j < len(u):
        raise ValueError(f"index {j} out of range")
    uj = u[j]
    if uj == 0:
        raise ValueError("coordinate is zero; nothing to normalize")
    v = uj // (uj & -uj)
    if v == 1:
        raise ValueError(f"coordinate {uj} is already a power of two")
    y = list(_require_solution(y_tilde, u, q))
    y[j] = (v * y[j]) % 2**q
    return tuple(y)
