"""Recovering the hidden shift from measurement samples.

Two estimators over the candidate box {0..2^k}^n minus the origin:
maximum likelihood under the closed-form outcome law, and a
disequation sieve that discards candidates orthogonal to too many
observed frequencies. Both operate on the signal branch (c = 1) only,
where the outcome law actually depends on the shift.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Params, make_shift
from .spectrum import Sample


@dataclass(frozen=True)
class RecoveryReport:
    recovered_u_tilde: tuple[int, ...]
    recovered_u: tuple[float, ...]
    sample_count_used: int
    strategy: str
    log_likelihood: float
    candidate_set_size: int


def filter_signal_branch(samples: Sequence[Sample]) -> list[tuple[int, ...]]:
    """Keep the frequency vectors of samples from the c = 1 branch."""
    return [s.y_tilde for s in samples if s.c == 1]


def _candidates(params: Params) -> list[tuple[int, ...]]:
    top = 2**params.k
    cands = [
        c
        for c in itertools.product(range(top + 1), repeat=params.n)
        if any(c)
    ]
    return cands


def log_likelihood(
    points: np.ndarray, u_tilde: Sequence[int], params: Params
) -> float:
    """Log mass of the observed c = 1 frequencies under candidate u.

    The conditional law on the signal branch is p(y) / (N^n / 2) with
    p(y) = (1 - cos(2 pi <u, y> / N) * prod_i cos(pi u_i / N)) / 2.
    Outcomes with p = 0 force the likelihood to -inf.
    """
    if not any(int(c) for c in u_tilde):
        raise ValueError("zero candidate has no signal branch; excluded from scoring")
    n_pts = params.grid_size
    u = np.asarray(u_tilde, dtype=np.int64)
    rho = float(np.prod(np.cos(np.pi * u / n_pts)))
    inner = points @ u
    p = 0.5 - 0.5 * np.cos(2.0 * np.pi * (inner / n_pts)) * rho
    norm = n_pts**params.n / 2.0
    with np.errstate(divide="ignore"):
        logs = np.where(p > 0.0, np.log(np.maximum(p, 1e-300) / norm), -np.inf)
    return float(np.sum(logs))


def recover_shift(samples: Sequence[Sample], params: Params) -> RecoveryReport:
    """Maximum-likelihood shift over the candidate box.

    Ties keep the lexicographically smallest candidate (strict
    improvement required to replace the incumbent).
    """
    ys = filter_signal_branch(samples)
    if not ys:
        raise ValueError("no signal-branch samples; cannot recover")
    points = np.asarray(ys, dtype=np.int64)
    best: tuple[int, ...] | None = None
    best_ll = -math.inf
    cands = _candidates(params)
    for cand in cands:
        ll = log_likelihood(points, cand, params)
        if ll > best_ll:
            best, best_ll = cand, ll
    assert best is not None
    shift = make_shift(best, params)
    return RecoveryReport(
        recovered_u_tilde=best,
        recovered_u=shift.u_real,
        sample_count_used=len(ys),
        strategy="ml",
        log_likelihood=best_ll,
        candidate_set_size=len(cands),
    )


def diseq_candidates(
    samples: Sequence[Sample],
    params: Params,
    tolerance: float | None = None,
) -> list[tuple[int, ...]]:
    """Candidates not ruled out by the orthogonality sieve.

    A candidate v is kept when the fraction of signal-branch samples
    with <v, y> = 0 (mod 2^q) stays at or below the tolerance. The true
    shift hits orthogonal frequencies with probability at most
    2^{-3k}, so the default tolerance 2 * 2^{-3k} keeps it with high
    probability while discarding aligned impostors.
    """
    if tolerance is None:
        tolerance = 2.0 * 2.0 ** (-3 * params.k)
    if not 0.0 <= tolerance < 1.0:
        raise ValueError(f"tolerance {tolerance} outside [0, 1)")
    ys = filter_signal_branch(samples)
    if not ys:
        raise ValueError("no signal-branch samples; cannot sieve")
    points = np.asarray(ys, dtype=np.int64)
    n_pts = params.grid_size
    kept = []
    for cand in _candidates(params):
        v = np.asarray(cand, dtype=np.int64)
        hits = np.count_nonzero((points @ v) % n_pts == 0)
        if hits / len(ys) <= tolerance:
            kept.append(cand)
    return kept


def recover_shift_diseq(
    samples: Sequence[Sample],
    params: Params,
    tolerance: float | None = None,
) -> RecoveryReport:
    """Sieve first, then maximum likelihood over the survivors."""
    ys = filter_signal_branch(samples)
    if not ys:
        raise ValueError("no signal-branch samples; cannot recover")
    survivors = diseq_candidates(samples, params, tolerance)
    if not survivors:
        raise ValueError("the sieve eliminated every candidate; tolerance too tight")
    points = np.asarray(ys, dtype=np.int64)
    best: tuple[int, ...] | None = None
    best_ll = -math.inf
    for cand in survivors:
        ll = log_likelihood(points, cand, params)
        if ll > best_ll:
            best, best_ll = cand, ll
    assert best is not None
    shift = make_shift(best, params)
    return RecoveryReport(
        recovered_u_tilde=best,
        recovered_u=shift.u_real,
        sample_count_used=len(ys),
        strategy="diseq",
        log_likelihood=best_ll,
        candidate_set_size=len(survivors),
    )


def finalize(u_tilde: Sequence[int], params: Params) -> tuple[float, ...]:
    """Rescale the recovered integer vector to the real shift u = delta * u~.

    delta is a power of two, so the product is exact in binary floating
    point and u / delta round-trips to the integer vector.
    """
    return make_shift(u_tilde, params).u_real
