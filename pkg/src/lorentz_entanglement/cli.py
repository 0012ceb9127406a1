"""Command-line entry point: ``measure``, ``sweep``, ``verify`` and ``wigner``.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

from . import entanglement as ent
from . import kinematics as kin
from . import sweep as sw
from . import verify as vf

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_IO = 0, 1, 2, 3


class ArgError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentz-entanglement",
        description="Spin entanglement of a two-particle state seen from a boosted frame.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="all measures at one (alpha, n) point")
    m.add_argument("--alpha", type=float, required=True)
    m.add_argument("--n", type=float, required=True)
    m.add_argument("--as-printed", action="store_true",
                   help="also report the reduced concurrence with a 1/2 prefactor")
    m.add_argument("--format", choices=("csv", "json"), default="json")

    s = sub.add_parser("sweep", help="grid sweep written to CSV or JSON")
    s.add_argument("--alpha-min", type=float, default=0.01)
    s.add_argument("--alpha-max", type=float, default=0.99)
    s.add_argument("--alpha-steps", type=int, default=99)
    s.add_argument("--n-min", type=float, default=0.0)
    s.add_argument("--n-max", type=float, default=1.0)
    s.add_argument("--n-steps", type=int, default=101,
                   help="points on the second axis (n, or xi in kinematic mode)")
    s.add_argument("--mode", choices=("direct-n", "kinematic"), default="direct-n")
    s.add_argument("--w-over-m", type=float)
    s.add_argument("--xi-min", type=float)
    s.add_argument("--xi-max", type=float)
    s.add_argument("--output", help="output file; standard output if omitted")
    s.add_argument("--format", choices=("csv", "json"), default="csv")

    v = sub.add_parser("verify", help="run every self-check suite")
    v.add_argument("--grid-density", type=int, default=20)
    v.add_argument("--seed", type=int, default=42)

    w = sub.add_parser("wigner", help="rapidities and Wigner angle for a boost and a momentum")
    w.add_argument("--beta", type=float, required=True)
    w.add_argument("--p-over-m", type=float, required=True)
    return parser


def cmd_measure(args) -> int:
    if not 0 < args.alpha < 1:
        raise ArgError(f"--alpha must lie in (0, 1), got {args.alpha}")
    if not 0 <= args.n <= 1:
        raise ArgError(f"--n must lie in [0, 1], got {args.n}")
    rec = sw.measure(args.alpha, args.n)
    sw.check_record(rec)
    if args.format == "csv":
        text = sw.to_csv([rec])
        if args.as_printed:
            lines = text.splitlines()
            value = ent.concurrence_reduced_as_printed(args.alpha, args.n)
            text = f"{lines[0]},concurrence_reduced_as_printed\n{lines[1]},{value:.17g}\n"
        sys.stdout.write(text)
    else:
        out = asdict(rec)
        if args.as_printed:
            out["concurrence_reduced_as_printed"] = ent.concurrence_reduced_as_printed(args.alpha, args.n)
        sys.stdout.write(json.dumps(out, indent=1) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = sw.SweepConfig(
        alpha_min=args.alpha_min,
        alpha_max=args.alpha_max,
        alpha_steps=args.alpha_steps,
        n_min=args.n_min,
        n_max=args.n_max,
        n_steps=args.n_steps,
        mode=args.mode,
        w_over_m=args.w_over_m,
        xi_min=args.xi_min,
        xi_max=args.xi_max,
        output_path=args.output,
        format=args.format,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise ArgError(str(exc)) from exc
    try:
        records = sw.run_sweep(config)
    except sw.InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    text = sw.render(records, config.format)
    if config.output_path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(config.output_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {config.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(records)} records to {config.output_path}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.grid_density < 10:
        raise ArgError(f"--grid-density must be >= 10, got {args.grid_density}")
    results = vf.run_all(args.grid_density, args.seed)
    for res in results:
        print(res.line())
    failed = [r for r in results if r.hard and not r.passed]
    if failed:
        print(f"verification FAILED: {failed[0].name}")
        return EXIT_VERIFY
    print("verification passed")
    return EXIT_OK


def cmd_wigner(args) -> int:
    if not 0 <= args.beta < 1:
        raise ArgError(f"--beta must lie in [0, 1), got {args.beta}")
    if not args.p_over_m >= 0:
        raise ArgError(f"--p-over-m must be >= 0, got {args.p_over_m}")
    xi = kin.rapidity_from_beta(args.beta).xi
    delta = kin.ParticleRapidity.from_momentum(args.p_over_m, 1.0).delta
    theta = kin.wigner_angle(xi, delta)
    print(f"xi = {xi:.17g}")
    print(f"delta = {delta:.17g}")
    print(f"theta_rad = {theta:.17g}")
    print(f"theta_deg = {math.degrees(theta):.17g}")
    return EXIT_OK


COMMANDS = {"measure": cmd_measure, "sweep": cmd_sweep, "verify": cmd_verify, "wigner": cmd_wigner}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ArgError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
