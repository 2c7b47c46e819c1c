"""Command-line front end.

Subcommands: simulate, sample, count, identity, recover, pipeline,
sweep. Exit codes: 0 success, 2 invalid configuration, 3 resource
ceiling exceeded, 4 verification mismatch (simulate / count /
identity found disagreeing values).
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import json
import sys
from typing import Iterator, TextIO

from .core import DEFAULT_ENUM_CEILING, ResourceCeilingError, make_oracle, make_params
from .identities import check_block, check_lowered_sum, check_total
from .orthogonality import brute_count, gcd_count, max_orthogonal_count
from .pipeline import (
    RunConfig,
    _plant_shift,
    read_samples,
    run_pipeline,
    run_sweep,
    write_report,
    write_samples,
    write_sweep_csv,
    write_sweep_json,
)
from .recovery import recover_shift, recover_shift_diseq
from .simulator import build_state, fourier_measure
from .spectrum import _p_grid, draw_samples

_CLOSED_FORM_TOL = 1e-10
_MASS_TOL = 1e-12


def _parse_shift(text: str) -> tuple[int, ...] | None:
    if text == "random":
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"--shift must be comma-separated integers or 'random', got {text!r}"
        ) from None


@contextlib.contextmanager
def _out_stream(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            yield fh


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        n=args.n,
        q=args.q,
        u_tilde=_parse_shift(args.shift),
        samples=getattr(args, "samples", 500),
        seed=args.seed,
        strategy=getattr(args, "strategy", "ml"),
        tolerance=getattr(args, "tolerance", None),
        out_format=getattr(args, "format", "csv"),
        out_path=getattr(args, "out", None),
        max_enum=getattr(args, "max_enum", DEFAULT_ENUM_CEILING),
    )


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    params = cfg.validate()
    shift = _plant_shift(cfg, params, trial=0)
    oracle = make_oracle(shift, params)
    if params.grid_size**params.n * 2 > cfg.max_enum:
        raise ResourceCeilingError(
            f"state over 2 * 2^{params.q * params.n} labels exceeds the ceiling"
            f" {cfg.max_enum}"
        )
    dist = fourier_measure(build_state(params, oracle))

    n_pts = params.grid_size
    grid = _p_grid(shift, params)  # branch-1 cosine form, values in [0, 1]
    scale = float(n_pts) ** params.n
    worst = 0.0
    for (y, c), mass in dist.mass.items():
        expect = float(grid[y]) / scale if c == 1 else (1.0 - float(grid[y])) / scale
        worst = max(worst, abs(mass - expect))

    total = dist.total()
    branch1 = dist.branch_mass(1)
    shift_txt = ",".join(str(v) for v in shift.u_tilde)
    print(f"shift {shift_txt}")
    print(f"total_mass {total!r}")
    print(f"branch1_mass {branch1!r}")
    print(f"max_closed_form_deviation {worst!r}")

    if args.out is not None:
        with _out_stream(args.out) as fh:
            if cfg.out_format == "json":
                payload = [
                    {"y": list(y), "c": c, "measured": mass,
                     "closed_form": float(grid[y] if c else 1.0 - grid[y]) / scale}
                    for (y, c), mass in sorted(dist.mass.items())
                ]
                json.dump(payload, fh, indent=2)
                fh.write("\n")
            else:
                head = [f"y{i + 1}" for i in range(params.n)]
                fh.write(",".join(head + ["c", "measured", "closed_form"]) + "\n")
                for (y, c), mass in sorted(dist.mass.items()):
                    expect = float(grid[y] if c else 1.0 - grid[y]) / scale
                    row = [str(v) for v in y] + [str(c), repr(mass), repr(expect)]
                    fh.write(",".join(row) + "\n")

    ok = worst <= _CLOSED_FORM_TOL and abs(total - 1.0) <= _MASS_TOL
    if not shift.is_zero():
        ok = ok and abs(branch1 - 0.5) <= _MASS_TOL
    if not ok:
        print("verification mismatch: simulated spectrum departs from the closed form",
              file=sys.stderr)
        return 4
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    cfg = _config(args)
    params = cfg.validate()
    shift = _plant_shift(cfg, params, trial=0)
    samples = draw_samples(
        shift, params, cfg.samples, (cfg.seed, 0, 1), max_enum=cfg.max_enum
    )
    with _out_stream(args.out) as fh:
        write_samples(samples, params.n, fh)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    shift = _parse_shift(args.shift)
    if shift is None:
        raise ValueError("count needs an explicit --shift vector")
    q = args.q
    by_gcd = gcd_count(shift, q)
    by_brute = brute_count(shift, q, max_enum=args.max_enum)
    rows = [("brute", by_brute), ("gcd-formula", by_gcd)]
    k = q // 4
    if q % 4 == 0 and k >= 1 and all(c == 2**k for c in shift):
        rows.append(("extremal-formula", max_orthogonal_count(len(shift), k)))
    with _out_stream(args.out) as fh:
        if args.format == "json":
            json.dump({method: count for method, count in rows}, fh, indent=2)
            fh.write("\n")
        else:
            fh.write("method,count\n")
            for method, count in rows:
                fh.write(f"{method},{count}\n")
    values = {count for _, count in rows}
    if len(values) != 1:
        print("verification mismatch: counting methods disagree", file=sys.stderr)
        return 4
    return 0


def _cmd_identity(args: argparse.Namespace) -> int:
    n_max = args.n
    k_max = args.q // 4
    if n_max < 1 or k_max < 1:
        raise ValueError("need --n >= 1 and --q >= 4")
    checked = 0
    failures = []

    for n in range(0, n_max + 1):
        for l in range(0, 11):
            for big_l in range(n * l, n * l + 51):
                rep = check_lowered_sum(n, big_l, l)
                checked += 1
                if not rep.holds:
                    failures.append(rep)
    print(f"lowered-sum identity: {checked} parameter triples checked")

    block_checked = 0
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            for i in range(1, 2**k + 1):
                rep = check_block(n, k, i)
                block_checked += 1
                if not rep.holds:
                    failures.append(rep)
    print(f"block-sum identity: {block_checked} parameter triples checked")

    total_checked = 0
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            rep = check_total(n, k)
            total_checked += 1
            if not rep.holds:
                failures.append(rep)
            if (2 ** (4 * k)) ** n <= args.max_enum:
                brute = brute_count((2**k,) * n, 4 * k, max_enum=args.max_enum)
                if brute != rep.rhs:
                    failures.append(rep)
    print(f"total-count identity: {total_checked} parameter pairs checked"
          " (cross-checked by enumeration where affordable)")

    for rep in failures:
        print(f"FAILED {rep.name} at {rep.params}: {rep.lhs} != {rep.rhs}",
              file=sys.stderr)
    if failures:
        return 4
    print("all identities hold exactly")
    return 0


def _cmd_recover(args: argparse.Namespace) -> int:
    with open(args.samples_file, "r", encoding="ascii") as fh:
        samples, n = read_samples(fh)
    params = make_params(n, args.q)
    if args.strategy == "ml":
        report = recover_shift(samples, params)
    else:
        report = recover_shift_diseq(samples, params, args.tolerance)
    with _out_stream(args.out) as fh:
        write_report(report, fh, args.format)
    return 0


def _cmd_pipeline(args: argparse.Namespace) -> int:
    cfg = _config(args)
    report = run_pipeline(cfg)
    with _out_stream(cfg.out_path) as fh:
        write_report(report, fh, cfg.out_format)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        sample_counts = [int(part) for part in args.samples.split(",")]
    except ValueError:
        raise ValueError(
            f"--samples for sweep takes comma-separated counts, got {args.samples!r}"
        ) from None
    if not sample_counts:
        raise ValueError("--samples needs at least one count")
    cfg = dataclasses.replace(_config(args), samples=sample_counts[0])
    cfg.validate()
    rows = run_sweep(cfg, sample_counts, args.trials)
    with _out_stream(cfg.out_path) as fh:
        if cfg.out_format == "json":
            write_sweep_json(rows, fh)
        else:
            write_sweep_csv(rows, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiddenshift",
        description="Simulate, verify, and run shift recovery on the dyadic grid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, *, shift_default: str | None = None):
        p.add_argument("--n", type=int, default=2, help="dimension")
        p.add_argument("--q", type=int, default=8, help="grid exponent (multiple of 4)")
        if shift_default is not None:
            p.add_argument(
                "--shift",
                default=shift_default,
                help="comma-separated integer shift or 'random'",
            )
        p.add_argument("--seed", type=int, default=0, help="generator seed")
        p.add_argument("--max-enum", dest="max_enum", type=int,
                       default=DEFAULT_ENUM_CEILING, help="enumeration ceiling")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("simulate", help="state-vector run vs closed form")
    add_common(p, shift_default="random")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sample", help="emit seeded measurement samples")
    add_common(p, shift_default="random")
    p.add_argument("--samples", type=int, default=500, help="number of draws")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("count", help="orthogonal-solution counting, all methods")
    p.add_argument("--q", type=int, default=4, help="modulus exponent")
    p.add_argument("--shift", required=True, help="comma-separated integer shift")
    p.add_argument("--max-enum", dest="max_enum", type=int,
                   default=DEFAULT_ENUM_CEILING)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("identity", help="verify the binomial identities on a grid")
    p.add_argument("--n", type=int, default=4, help="largest dimension checked")
    p.add_argument("--q", type=int, default=8,
                   help="largest grid exponent checked (k up to q/4)")
    p.add_argument("--max-enum", dest="max_enum", type=int,
                   default=DEFAULT_ENUM_CEILING)
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("recover", help="recover a shift from a sample file")
    p.add_argument("samples_file", help="path written by the sample subcommand")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--strategy", choices=("ml", "diseq"), default="ml")
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("pipeline", help="plant, sample, and recover end to end")
    add_common(p, shift_default="random")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--strategy", choices=("ml", "diseq"), default="ml")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("sweep", help="success-rate grid over sample counts")
    add_common(p, shift_default="random")
    p.add_argument("--samples", default="50,500",
                   help="comma-separated list of sample counts")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--strategy", choices=("ml", "diseq"), default="ml")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
