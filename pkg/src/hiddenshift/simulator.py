"""Sparse state-vector simulation of the shift-sampling circuit.

The simulated register layout is |x, c, z> where x runs over the grid,
c is the branch bit, and z is the opaque oracle index. The measurement
step applies the exact character transform of Z_{2^q}^n x Z_2 to the
(x, c) registers and traces out z.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .core import OracleModel, Params, window_1d

Label = tuple[tuple[int, ...], int, tuple[int, ...]]


@dataclass(frozen=True)
class QuantumState:
    """Sparse amplitude map keyed by basis label (x, c, z)."""

    amplitudes: dict[Label, float]
    params: Params

    def squared_norm(self) -> float:
        return math.fsum(a * a for a in self.amplitudes.values())


@dataclass(frozen=True)
class OutcomeDistribution:
    """Measurement distribution over (y, c) outcomes."""

    mass: dict[tuple[tuple[int, ...], int], float]
    params: Params

    def total(self) -> float:
        return math.fsum(self.mass.values())

    def branch_mass(self, c: int) -> float:
        return math.fsum(v for (_, b), v in self.mass.items() if b == c)


def build_state(p: Params, oracle: OracleModel) -> QuantumState:
    """Prepare the windowed superposition and apply the oracle.

    The amplitude magnitude at (x, c, index(x, c)) is sqrt(delta^n / 2)
    times the product window at delta*x. The c=1 branch additionally
    flips sign once per coordinate that wraps around the grid boundary
    (x_j < u_j): the window is read through its sign-alternating
    periodic extension at the unwrapped preimage z + u, which is what
    makes the finite cyclic model interfere exactly like the infinite
    lattice it stands in for.
    """
    if oracle.params != p:
        raise ValueError("oracle was built for different params")
    n_pts = p.grid_size
    u = oracle.shift.u_tilde

    # per-axis window samples omega(x_j / 2^q); zero only at x_j = 0
    axis = [window_1d(m / n_pts) for m in range(n_pts)]
    # sqrt(delta^n/2) * delta_big^(-n/2) = 2^(-qn/2) / sqrt(2)
    scale = 2.0 ** (-p.q * p.n / 2) / math.sqrt(2.0)

    amplitudes: dict[Label, float] = {}
    stack = [((), 1.0)]
    for _ in range(p.n):
        stack = [
            (partial + (m,), w * axis[m])
            for partial, w in stack
            for m in range(1, n_pts)  # axis[0] == 0, skip the dead slice
        ]
    for x, w in stack:
        a = scale * w
        amplitudes[(x, 0, x)] = a
        z = tuple((xj - uj) % n_pts for xj, uj in zip(x, u))
        sign = 1.0
        for xj, uj in zip(x, u):
            if xj < uj:
                sign = -sign
        amplitudes[(x, 1, z)] = sign * a
    return QuantumState(amplitudes=amplitudes, params=p)


def fourier_measure(state: QuantumState) -> OutcomeDistribution:
    """Exact outcome distribution after the character transform.

    For each oracle index z the transformed amplitude at (y, b) is
    2^(-qn/2) * 2^(-1/2) * sum over contributing (x, c) of
    amp * exp(2*pi*i*<x, y>/2^q) * (-1)^(b*c); the outcome mass is the
    squared magnitude summed over z. Expanding the square turns this
    into a sum over label pairs that share z, aggregated by the
    coordinate difference d = x - x' and bit difference e = c - c', so
    the y-grid evaluation only touches the few distinct d vectors.
    """
    p = state.params
    n_pts, n = p.grid_size, p.n

    norm = math.fsum(a * a for a in state.amplitudes.values())
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"state is not normalized (squared norm {norm})")

    groups: dict[tuple[int, ...], list[tuple[tuple[int, ...], int, float]]] = defaultdict(list)
    for (x, c, z), a in state.amplitudes.items():
        groups[z].append((x, c, a))

    pair_weight: dict[tuple[tuple[int, ...], int], float] = defaultdict(float)
    for entries in groups.values():
        for x1, c1, a1 in entries:
            for x2, c2, a2 in entries:
                d = tuple((i - j) % n_pts for i, j in zip(x1, x2))
                pair_weight[(d, c1 - c2)] += a1 * a2

    shape = (n_pts,) * n
    acc = {0: np.zeros(shape, dtype=complex), 1: np.zeros(shape, dtype=complex)}
    phase_cache: dict[tuple[int, ...], np.ndarray] = {}
    axis_freq = np.arange(n_pts)
    for (d, e), w in pair_weight.items():
        phase = phase_cache.get(d)
        if phase is None:
            phase = np.ones((), dtype=complex)
            for dj in d:
                phase = np.multiply.outer(phase, np.exp(2j * np.pi * dj * axis_freq / n_pts))
            phase_cache[d] = phase
        for b in (0, 1):
            sign = -1.0 if (b * e) % 2 else 1.0
            acc[b] += (w * sign) * phase

    mass: dict[tuple[tuple[int, ...], int], float] = {}
    scale = 1.0 / (2.0 * n_pts**n)
    for b in (0, 1):
        values = acc[b].real * scale
        if values.min() < -1e-15:
            raise AssertionError(f"measurement produced mass {values.min()} below -1e-15")
        np.clip(values, 0.0, None, out=values)
        for y, v in zip(np.ndindex(shape), values.reshape(-1)):
            mass[(y, b)] = float(v)
    return OutcomeDistribution(mass=mass, params=p)


def is_zero_shift(oracle: OracleModel) -> bool:
    """Zero-shift detection: the two branches address the same index at the origin."""
    origin = (0,) * oracle.params.n
    return oracle.index(origin, 0) == oracle.index(origin, 1)
