"""Closed-form outcome spectrum and seeded sampling.

The branch-1 outcome probability has an exact product form in this
model: for a frequency vector y (real coordinates, grid frequency
y = y_tilde / delta_big),

    p(y) = 1/2 - 1/2 * cos(2*pi*<u, y>) * prod_i cos(pi * u_i / delta_big)

and the joint measurement distribution over (y_tilde, c) is
P(y_tilde, 1) = p / 2^(qn), P(y_tilde, 0) = (1 - p) / 2^(qn).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DEFAULT_ENUM_CEILING, HiddenShift, Params, ResourceCeilingError


@dataclass(frozen=True)
class Sample:
    """One measurement record: grid frequency vector and branch bit."""

    y_tilde: tuple[int, ...]
    c: int


def p_closed(y: Sequence[float], shift: HiddenShift, p: Params) -> float:
    """Closed-form branch-1 probability density factor at real frequency y."""
    if len(y) != p.n:
        raise ValueError(f"frequency has {len(y)} coordinates, expected {p.n}")
    u = shift.u_real
    rho = 1.0
    for ui in u:
        rho *= math.cos(math.pi * ui / p.delta_big)
    inner = sum(ui * yi for ui, yi in zip(u, y))
    return 0.5 - 0.5 * math.cos(2.0 * math.pi * inner) * rho


def _modulation(shift: HiddenShift, p: Params) -> float:
    """prod_i cos(pi * u_i / 2^q) over integer shift coordinates."""
    rho = 1.0
    for ui in shift.u_tilde:
        rho *= math.cos(math.pi * ui / p.grid_size)
    return rho


def _p_grid(shift: HiddenShift, p: Params) -> np.ndarray:
    """p_closed evaluated on the whole integer frequency grid, shape (2^q,)*n."""
    n_pts = p.grid_size
    inner = np.zeros((), dtype=np.int64)
    for ui in shift.u_tilde:
        inner = np.add.outer(inner, ui * np.arange(n_pts, dtype=np.int64))
    rho = _modulation(shift, p)
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * (inner / n_pts)) * rho


def _p_at(points: np.ndarray, shift: HiddenShift, p: Params) -> np.ndarray:
    """p_closed at an (m, n) array of integer frequency vectors."""
    u = np.asarray(shift.u_tilde, dtype=np.int64)
    inner = points @ u
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * (inner / p.grid_size)) * _modulation(shift, p)


def conditional_mass(shift: HiddenShift, p: Params) -> dict[tuple[int, ...], float]:
    """Distribution of y_tilde conditioned on measuring c = 1.

    Normalizes the closed-form grid values by their sum, which for any
    nonzero shift equals 2^(qn) / 2 exactly (the oscillatory term sums
    to zero over a full period).
    """
    if shift.is_zero():
        raise ValueError("conditional distribution is degenerate for the zero shift")
    grid = _p_grid(shift, p)
    total = grid.sum()
    flat = grid.reshape(-1) / total
    return {y: float(v) for y, v in zip(np.ndindex(grid.shape), flat)}


def draw_samples(
    shift: HiddenShift,
    p: Params,
    m: int,
    seed: int | tuple[int, ...],
    *,
    max_enum: int = DEFAULT_ENUM_CEILING,
    rejection: bool = True,
) -> list[Sample]:
    """Draw m independent (y_tilde, c) pairs from the joint distribution.

    Uses exact categorical sampling over the enumerated joint table when
    the grid fits under max_enum, otherwise rejection sampling against a
    uniform proposal (accept a proposed (y, c) with probability p for
    c = 1 and 1 - p for c = 0; both are at most 1). The generator is a
    locally seeded PCG64 stream, so equal seeds reproduce equal sample
    lists on any platform.
    """
    if m < 1:
        raise ValueError(f"sample count must be >= 1, got {m}")
    if shift.is_zero():
        raise ValueError("sampling is degenerate for the zero shift; handle it upstream")
    rng = np.random.default_rng(seed)
    n_pts, n = p.grid_size, p.n

    if n_pts**n <= max_enum:
        grid = _p_grid(shift, p).reshape(-1)
        cell = 1.0 / n_pts**n
        # outcome index: flat y index, then branch bit in the low position
        probs = np.empty(2 * grid.size)
        probs[0::2] = cell * (1.0 - grid)
        probs[1::2] = cell * grid
        cdf = np.cumsum(probs)
        cdf[-1] = 1.0
        draws = np.searchsorted(cdf, rng.random(m), side="right")
        samples = []
        shape = (n_pts,) * n
        for outcome in draws:
            y = np.unravel_index(int(outcome) // 2, shape)
            samples.append(Sample(tuple(int(v) for v in y), int(outcome) % 2))
        return samples

    if not rejection:
        raise ResourceCeilingError(
            f"grid of 2^{p.q * n} outcomes exceeds the enumeration ceiling {max_enum} "
            "and rejection sampling is disabled"
        )

    samples: list[Sample] = []
    while len(samples) < m:
        want = m - len(samples)
        chunk = 2 * want + 16
        ys = rng.integers(0, n_pts, size=(chunk, n), dtype=np.int64)
        cs = rng.integers(0, 2, size=chunk)
        accept_p = _p_at(ys, shift, p)
        accept_p = np.where(cs == 1, accept_p, 1.0 - accept_p)
        keep = rng.random(chunk) < accept_p
        for row, c in zip(ys[keep], cs[keep]):
            samples.append(Sample(tuple(int(v) for v in row), int(c)))
            if len(samples) == m:
                break
    return samples
