"""Command-line front end.

Subcommands: ``measure`` (one state/channel/exponent evaluation),
``sweep`` (CSV/JSON grids over exponents and channel strength),
``verify`` (the randomized property suites) and ``mz`` (Mach-Zehnder
duality run). All output is deterministic given explicit seeds.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 invariant violation, 4 unwritable output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .descriptors import (
    DescriptorError,
    channel_from_json,
    mz_config_from_json,
    scalar_channel_builder,
    state_from_json,
)
from .errors import InvariantViolation
from .interferometer import build_mz_channel, mz_skew_info, mz_sym_info, path_information, visibility
from .measures import SkewParams, channel_skew_info, measure_report
from .states import from_bloch
from .verification import run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_IO = 4

SWEEP_COLUMNS = ("alpha", "beta", "strength", "I", "J", "V", "W",
                 "sum_IJ", "rhs_IJ", "sum_VW", "rhs_VW")


def _load_text(value: str, what: str) -> str:
    """Inline JSON if it looks like JSON, otherwise a file path."""
    text = value.strip()
    if text.startswith("{") or text.startswith("["):
        return text
    try:
        return Path(value).read_text()
    except OSError as exc:
        raise DescriptorError(f"{what}: cannot read file {value!r}: {exc}") from None


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def cmd_measure(args) -> int:
    rho = state_from_json(_load_text(args.state, "--state"))
    chan = channel_from_json(_load_text(args.channel, "--channel"))
    rep = measure_report(rho, chan, SkewParams(args.alpha, args.beta))
    print(json.dumps(rep.to_dict(), indent=2))
    return EXIT_OK


def _parse_sweep_spec(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"sweep spec: invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DescriptorError("sweep spec: expected a JSON object")
    for key in ("state", "channel", "alpha_grid", "beta_grid", "strength_grid"):
        if key not in obj:
            raise DescriptorError(f"sweep spec needs '{key}'")
    rho = state_from_json(obj["state"])
    chan_desc = obj["channel"]
    if not isinstance(chan_desc, dict) or "name" not in chan_desc:
        raise DescriptorError("sweep spec: channel must name a strength-parameterized channel")
    builder = scalar_channel_builder(chan_desc["name"])
    grids = []
    for key in ("alpha_grid", "beta_grid", "strength_grid"):
        g = obj[key]
        if not isinstance(g, list):
            raise DescriptorError(f"sweep spec: '{key}' must be a list")
        grids.append([float(x) for x in g])
    alphas, betas, strengths = grids
    for i, a in enumerate(alphas):
        for j, b in enumerate(betas):
            try:
                SkewParams(a, b)
            except InvariantViolation as exc:
                raise DescriptorError(
                    f"sweep spec: alpha_grid[{i}]={a:g} with beta_grid[{j}]={b:g}: {exc}"
                ) from None
    return rho, chan_desc["name"], builder, alphas, betas, strengths, obj


def cmd_sweep(args) -> int:
    rho, name, builder, alphas, betas, strengths, obj = _parse_sweep_spec(
        _load_text(args.grid, "--grid"))
    out_path = args.out or obj.get("output")
    fmt = args.format or obj.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise DescriptorError(f"format must be csv or json, got {fmt!r}")
    rows = []
    for a in alphas:
        for b in betas:
            for s in strengths:
                rep = measure_report(rho, builder(s), SkewParams(a, b))
                rows.append((a, b, s, rep.I, rep.J, rep.V, rep.W,
                             rep.sum_ij, rep.rhs_ij, rep.sum_vw, rep.rhs_vw))
    if fmt == "csv":
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(_fmt(x) for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([dict(zip(SWEEP_COLUMNS, row)) for row in rows], indent=2) + "\n"
    if out_path:
        try:
            Path(out_path).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {out_path!r}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise DescriptorError("--trials must be >= 1")
    report = run_all(args.seed, args.trials)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def cmd_mz(args) -> int:
    cfg, alpha, n_grid = mz_config_from_json(_load_text(args.config, "--config"))
    thetas = [2.0 * np.pi * i / n_grid for i in range(n_grid)]
    i_vals, j_vals, kern_i = [], [], []
    for t in thetas:
        at_t = cfg.with_theta(t)
        i_vals.append(mz_skew_info(at_t, alpha))
        j_vals.append(mz_sym_info(at_t, alpha))
    # one kernel evaluation as a spot check of the closed form
    chan = build_mz_channel(cfg.with_theta(thetas[0]))
    kernel_i0 = channel_skew_info(from_bloch(cfg.bloch), chan, SkewParams(alpha, 1.0 - alpha))
    p_tilde = path_information(cfg, alpha)
    w_tilde = visibility(cfg, alpha)
    out = {
        "alpha": alpha,
        "theta": thetas,
        "I_alpha": i_vals,
        "J_alpha": j_vals,
        "kernel_I_at_theta0": kernel_i0,
        "closed_form_residual_at_theta0": abs(kernel_i0 - i_vals[0]),
        "P_tilde": p_tilde,
        "W_tilde": w_tilde,
        "duality_residual": abs(p_tilde + w_tilde - 1.0),
    }
    text = json.dumps(out, indent=2) + "\n"
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcoh",
        description="Skew-information coherence measures for states and Kraus channels.")
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="evaluate all measures for one configuration")
    m.add_argument("--state", required=True, help="state descriptor: inline JSON or a file path")
    m.add_argument("--channel", required=True, help="channel descriptor: inline JSON or a file path")
    m.add_argument("--alpha", type=float, required=True)
    m.add_argument("--beta", type=float, required=True)
    m.set_defaults(fn=cmd_measure)

    s = sub.add_parser("sweep", help="grid sweep over exponents and channel strength")
    s.add_argument("--grid", required=True, help="sweep spec: inline JSON or a file path")
    s.add_argument("--out", help="output path (overrides the spec's 'output')")
    s.add_argument("--format", choices=("csv", "json"), help="overrides the spec's 'format'")
    s.set_defaults(fn=cmd_sweep)

    v = sub.add_parser("verify", help="run the randomized property suites")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=200)
    v.set_defaults(fn=cmd_verify)

    z = sub.add_parser("mz", help="Mach-Zehnder duality run")
    z.add_argument("--config", required=True, help="interferometer config: inline JSON or a file path")
    z.add_argument("--out", help="output path (default stdout)")
    z.set_defaults(fn=cmd_mz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DescriptorError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
