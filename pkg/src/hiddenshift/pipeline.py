"""End-to-end runs, parameter sweeps, and file interchange.

A run plants a shift (given or random), short-circuits the zero shift
via the oracle identity check, draws seeded samples, recovers the
shift, and reports. A sweep repeats runs over a grid of sample counts
with per-trial generator streams derived from (seed, trial, purpose),
so rows that differ only in sample count see the same planted shifts
and share sample-stream prefixes — success rates at different m are
comparable trial by trial.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import time
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from .core import (
    DEFAULT_ENUM_CEILING,
    HiddenShift,
    Params,
    make_oracle,
    make_params,
    make_shift,
)
from .recovery import RecoveryReport, recover_shift, recover_shift_diseq
from .simulator import is_zero_shift
from .spectrum import Sample, draw_samples

# Purpose tags for derived generator streams (third seed component).
_SHIFT_STREAM = 0
_SAMPLE_STREAM = 1


@dataclass(frozen=True)
class RunConfig:
    n: int
    q: int
    u_tilde: tuple[int, ...] | None = None  # None plants a random nonzero shift
    samples: int = 500
    seed: int = 0
    strategy: str = "ml"  # "ml" or "diseq"
    tolerance: float | None = None
    out_format: str = "csv"  # "csv" or "json"
    out_path: str | None = None
    max_enum: int = DEFAULT_ENUM_CEILING

    def validate(self) -> Params:
        params = make_params(self.n, self.q)
        if self.u_tilde is not None:
            make_shift(self.u_tilde, params)  # raises on bad coordinates
        if self.samples < 1:
            raise ValueError(f"sample count must be >= 1, got {self.samples}")
        if self.strategy not in ("ml", "diseq"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.out_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.out_format!r}")
        return params


@dataclass(frozen=True)
class SweepRow:
    n: int
    q: int
    k: int
    u_tilde: str  # "random" or the comma-joined planted vector
    m: int
    trials: int
    successes: int
    success_rate: float
    mean_orthogonal_sample_fraction: float
    wall_time: float
    error: str = ""  # nonempty marks a failed row; other stats are zeroed


def _plant_shift(cfg: RunConfig, params: Params, trial: int) -> HiddenShift:
    if cfg.u_tilde is not None:
        return make_shift(cfg.u_tilde, params)
    rng = np.random.default_rng((cfg.seed, trial, _SHIFT_STREAM))
    coords = rng.integers(1, 2**params.k + 1, size=params.n)
    return make_shift(tuple(int(c) for c in coords), params)


def _zero_report(params: Params) -> RecoveryReport:
    zero = (0,) * params.n
    return RecoveryReport(
        recovered_u_tilde=zero,
        recovered_u=(0.0,) * params.n,
        sample_count_used=0,
        strategy="zero-detect",
        log_likelihood=0.0,
        candidate_set_size=0,
    )


def _run_one(
    cfg: RunConfig, params: Params, trial: int
) -> tuple[HiddenShift, RecoveryReport, float]:
    """One planted run; returns (shift, report, orthogonal-hit fraction)."""
    shift = _plant_shift(cfg, params, trial)
    oracle = make_oracle(shift, params)
    if is_zero_shift(oracle):
        return shift, _zero_report(params), 0.0

    samples = draw_samples(
        shift,
        params,
        cfg.samples,
        (cfg.seed, trial, _SAMPLE_STREAM),
        max_enum=cfg.max_enum,
    )
    signal = [s for s in samples if s.c == 1]
    if signal:
        pts = np.asarray([s.y_tilde for s in signal], dtype=np.int64)
        u = np.asarray(shift.u_tilde, dtype=np.int64)
        hits = int(np.count_nonzero((pts @ u) % params.grid_size == 0))
        orth_fraction = hits / len(signal)
    else:
        orth_fraction = 0.0

    if cfg.strategy == "ml":
        report = recover_shift(samples, params)
    else:
        report = recover_shift_diseq(samples, params, cfg.tolerance)
    return shift, report, orth_fraction


def run_pipeline(cfg: RunConfig) -> RecoveryReport:
    """Plant, sample, recover; the full loop for a single instance."""
    params = cfg.validate()
    _, report, _ = _run_one(cfg, params, trial=0)
    return report


def run_sweep(cfg: RunConfig, sample_counts: Sequence[int], trials: int) -> list[SweepRow]:
    """One row per sample count; a failing row is marked, not fatal."""
    if trials < 1:
        raise ValueError(f"trial count must be >= 1, got {trials}")
    rows = []
    for m in sample_counts:
        row_cfg = dataclasses.replace(cfg, samples=int(m))
        start = time.perf_counter()
        try:
            params = row_cfg.validate()
            successes = 0
            orth_fractions = []
            for trial in range(trials):
                shift, report, orth = _run_one(row_cfg, params, trial)
                if report.recovered_u_tilde == shift.u_tilde:
                    successes += 1
                orth_fractions.append(orth)
            rows.append(
                SweepRow(
                    n=row_cfg.n,
                    q=row_cfg.q,
                    k=params.k,
                    u_tilde=(
                        "random"
                        if row_cfg.u_tilde is None
                        else ",".join(str(c) for c in row_cfg.u_tilde)
                    ),
                    m=int(m),
                    trials=trials,
                    successes=successes,
                    success_rate=successes / trials,
                    mean_orthogonal_sample_fraction=float(np.mean(orth_fractions)),
                    wall_time=time.perf_counter() - start,
                )
            )
        except Exception as exc:  # mark the row, keep sweeping
            rows.append(
                SweepRow(
                    n=cfg.n,
                    q=cfg.q,
                    k=cfg.q // 4,
                    u_tilde=(
                        "random"
                        if cfg.u_tilde is None
                        else ",".join(str(c) for c in cfg.u_tilde)
                    ),
                    m=int(m),
                    trials=trials,
                    successes=0,
                    success_rate=0.0,
                    mean_orthogonal_sample_fraction=0.0,
                    wall_time=time.perf_counter() - start,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return rows


# ---------------------------------------------------------------------------
# File interchange


def sweep_fieldnames() -> list[str]:
    return [f.name for f in dataclasses.fields(SweepRow)]


def write_sweep_csv(rows: Sequence[SweepRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=sweep_fieldnames())
    writer.writeheader()
    for row in rows:
        writer.writerow({k: repr(v) if isinstance(v, float) else v
                         for k, v in dataclasses.asdict(row).items()})


def write_sweep_json(rows: Sequence[SweepRow], stream: TextIO) -> None:
    json.dump([dataclasses.asdict(row) for row in rows], stream, indent=2)
    stream.write("\n")


def report_to_dict(report: RecoveryReport) -> dict:
    d = dataclasses.asdict(report)
    d["recovered_u_tilde"] = list(report.recovered_u_tilde)
    d["recovered_u"] = list(report.recovered_u)
    return d


def write_report(report: RecoveryReport, stream: TextIO, out_format: str) -> None:
    if out_format == "json":
        json.dump(report_to_dict(report), stream, indent=2)
        stream.write("\n")
        return
    d = report_to_dict(report)
    d["recovered_u_tilde"] = ",".join(str(c) for c in report.recovered_u_tilde)
    d["recovered_u"] = ",".join(repr(c) for c in report.recovered_u)
    d["log_likelihood"] = repr(report.log_likelihood)
    writer = csv.DictWriter(stream, fieldnames=list(d))
    writer.writeheader()
    writer.writerow(d)


def write_samples(samples: Sequence[Sample], n: int, stream: TextIO) -> None:
    """One record per line, header then `c,y1,...,yn` decimal integers."""
    stream.write("c," + ",".join(f"y{i + 1}" for i in range(n)) + "\n")
    for s in samples:
        if len(s.y_tilde) != n:
            raise ValueError("sample dimension disagrees with header")
        stream.write(f"{s.c}," + ",".join(str(v) for v in s.y_tilde) + "\n")


def read_samples(stream: TextIO) -> tuple[list[Sample], int]:
    """Inverse of write_samples; returns the samples and the dimension."""
    header = stream.readline().strip()
    cols = header.split(",")
    if not cols or cols[0] != "c" or len(cols) < 2:
        raise ValueError(f"malformed sample header {header!r}")
    n = len(cols) - 1
    expected = [f"y{i + 1}" for i in range(n)]
    if cols[1:] != expected:
        raise ValueError(f"malformed sample header {header!r}")
    samples = []
    for lineno, line in enumerate(stream, start=2):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != n + 1:
            raise ValueError(f"line {lineno}: expected {n + 1} fields, got {len(parts)}")
        c = int(parts[0])
        y = tuple(int(v) for v in parts[1:])
        samples.append(Sample(y_tilde=y, c=c))
    return samples, n


def samples_to_text(samples: Sequence[Sample], n: int) -> str:
    buf = io.StringIO()
    write_samples(samples, n, buf)
    return buf.getvalue()
