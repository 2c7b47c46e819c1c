"""Grid geometry, window function, hidden shift, and oracle model.

Everything downstream works on an n-dimensional dyadic grid: the window
covers [0, W)^n where W = 2**(q/2), points are spaced delta = 2**(-q/2)
apart, so each axis carries 2**q points and every geometric quantity is
an exact binary float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

SQRT2 = math.sqrt(2.0)

#: default ceiling on the number of grid points any exhaustive routine may touch
DEFAULT_ENUM_CEILING = 2**24


class ResourceCeilingError(RuntimeError):
    """Raised when an exhaustive routine would exceed its enumeration ceiling."""


@dataclass(frozen=True)
class Params:
    """Instance geometry.

    Attributes
    ----------
    n : number of grid dimensions
    q : dyadic precision exponent, a positive multiple of 4
    k : q // 4, bounds the admissible shift coordinates by 2**k
    delta_big : window width per axis, 2**(q/2)
    delta_small : grid spacing, 2**(-q/2) (exact reciprocal of delta_big)
    grid_size : points per axis, 2**q
    """

    n: int
    q: int
    k: int
    delta_big: float
    delta_small: float
    grid_size: int


@dataclass(frozen=True)
class HiddenShift:
    """A hidden shift, stored both as integer grid coordinates and real values."""

    u_tilde: tuple[int, ...]
    u_real: tuple[float, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.u_tilde)


@dataclass(frozen=True)
class OracleModel:
    """Shift-promise oracle over basis labels.

    The oracle maps a grid point and a bit to an opaque basis index such
    that the c=1 branch is the c=0 branch translated by the hidden shift:
    index(x, 0) == index(x + u, 1) for every grid point x (cyclically).
    alpha is the Lipschitz constant of the underlying state family,
    sqrt(2) * delta_big.
    """

    shift: HiddenShift
    params: Params
    alpha: float

    def index(self, x_tilde: Sequence[int], c: int) -> tuple[int, ...]:
        """Basis label addressed by the oracle at (x_tilde, c)."""
        if c not in (0, 1):
            raise ValueError(f"c must be 0 or 1, got {c!r}")
        n_pts = self.params.grid_size
        u = self.shift.u_tilde
        return tuple((int(x) - c * ui) % n_pts for x, ui in zip(x_tilde, u))


def make_params(n: int, q: int) -> Params:
    """Validate (n, q) and derive the grid geometry.

    q must be a positive multiple of 4 so that both the window width
    2**(q/2) and the shift bound 2**(q/4) are integers.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension n must be a positive integer, got {n!r}")
    if not isinstance(q, int) or q < 4 or q % 4 != 0:
        raise ValueError(f"precision q must be a positive multiple of 4, got {q!r}")
    delta_big = float(2 ** (q // 2))
    return Params(
        n=n,
        q=q,
        k=q // 4,
        delta_big=delta_big,
        delta_small=1.0 / delta_big,
        grid_size=2**q,
    )


def window_1d(x: float) -> float:
    """One-dimensional window: sqrt(2)*sin(pi*x) on (0, 1), zero elsewhere.

    The closed support is [0, 1]; the function vanishes at both endpoints,
    which the implementation returns exactly.
    """
    if 0.0 < x < 1.0:
        return SQRT2 * math.sin(math.pi * x)
    return 0.0


def window_nd(x: Sequence[float], p: Params) -> float:
    """Product window delta_big**(-n/2) * prod_j window_1d(x_j / delta_big)."""
    if len(x) != p.n:
        raise ValueError(f"point has {len(x)} coordinates, expected {p.n}")
    value = p.delta_big ** (-p.n / 2)
    for xj in x:
        value *= window_1d(xj / p.delta_big)
    return value


def make_shift(u_tilde: Sequence[int], p: Params) -> HiddenShift:
    """Build a HiddenShift from integer coordinates, each in [0, 2**k]."""
    coords = tuple(int(c) for c in u_tilde)
    if len(coords) != p.n:
        raise ValueError(f"shift has {len(coords)} coordinates, expected {p.n}")
    bound = 2**p.k
    for c in coords:
        if not 0 <= c <= bound:
            raise ValueError(f"shift coordinate {c} outside [0, {bound}]")
    return HiddenShift(u_tilde=coords, u_real=tuple(c * p.delta_small for c in coords))


def make_oracle(shift: HiddenShift, p: Params) -> OracleModel:
    """Wrap a shift in its oracle model (Lipschitz constant sqrt(2)*delta_big)."""
    if len(shift.u_tilde) != p.n:
        raise ValueError("shift dimension does not match params")
    return OracleModel(shift=shift, params=p, alpha=SQRT2 * p.delta_big)
