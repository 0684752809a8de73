"""Command-line experiment surface.

Every command emits a machine-readable report (JSON, or CSV for sweeps)
that embeds the library version and the tolerances in effect, and is
byte-identical across repeated runs with the same configuration.

Exit codes: 0 success, 1 verification failure, 2 numerically indeterminate
outcome, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .catalog import (
    AlphaOutOfInterval,
    CATALOG_MAX_ORDER,
    interval_samples,
    verify_catalog_entry,
)
from .channels import (
    extract_basis,
    product_identity,
    random_span_set,
    realize_channels,
    span_equality,
    verify_kraus,
)
from .feasibility import (
    Certificate,
    NumericalIndeterminate,
    NonMonotonePredicate,
    Witness,
    necessity_scan,
    nns_exists,
    threshold_bisect,
)
from .tensor import (
    MatrixForm,
    SizeExceeded,
    a_alpha,
    build_B,
    build_C,
    build_C_block,
    build_Q,
    matrix_from_json,
    matrix_to_json,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 64

OUTPUT_DIR_ENV = "PARADIST_OUTPUT_DIR"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_alpha_options(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", type=float, help="phase angle in radians")
    group.add_argument("--pi-frac", help="phase angle as a fraction of pi, e.g. 3/4")


def _resolve_alpha(args) -> float:
    if getattr(args, "pi_frac", None):
        num, _, den = args.pi_frac.partition("/")
        try:
            return math.pi * int(num) / int(den or "1")
        except ValueError as exc:
            raise ValueError(f"bad --pi-frac value {args.pi_frac!r}") from exc
    alpha = args.alpha
    if alpha is None or not math.isfinite(alpha):
        raise ValueError("a finite --alpha or --pi-frac is required")
    return float(alpha)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paradist", description=__doc__)
    parser.add_argument("--version", action="version", version=f"paradist {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit one of the constructed matrices as JSON")
    p.add_argument("--n", type=int, required=True)
    _add_alpha_options(p)
    p.add_argument("--emit", choices=["A", "Q", "B", "C", "Cblock"], required=True)
    p.add_argument("--form", choices=["original", "reduced"], default="reduced",
                   help="base-matrix form, used when emitting A")
    p.add_argument("--output")

    p = sub.add_parser("verify-catalog", help="verify cataloged solutions on a sample grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol-residual", type=float, default=1e-9)
    p.add_argument("--tol-negative", type=float, default=1e-12)
    p.add_argument("--output")

    p = sub.add_parser("feasibility", help="decide nonnegative feasibility at one angle")
    p.add_argument("--n", type=int, required=True)
    _add_alpha_options(p)
    p.add_argument("--tol-witness", type=float, default=1e-8)
    p.add_argument("--tol-margin", type=float, default=1e-8)
    p.add_argument("--output")

    p = sub.add_parser("sweep", help="feasibility outcomes over an angle grid (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--alpha-min", type=float, default=math.pi / 2)
    p.add_argument("--alpha-max", type=float, default=math.pi)
    p.add_argument("--tol-witness", type=float, default=1e-8)
    p.add_argument("--tol-margin", type=float, default=1e-8)
    p.add_argument("--output")

    p = sub.add_parser("threshold", help="bisect the feasibility boundary in alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--output")

    p = sub.add_parser("necessity", help="certificates across the infeasible region")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--tol-margin", type=float, default=1e-8)
    p.add_argument("--output")

    p = sub.add_parser("realize", help="realize a product span by two operator families")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="JSON file with a 'matrices' list")
    src.add_argument("--random-dim", type=int, help="generate random square matrices")
    p.add_argument("--random-count", type=int, default=3)
    p.add_argument("--seed", type=int, help="seed for --random-dim generation")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--output")

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    out_dir = os.environ.get(OUTPUT_DIR_ENV)
    if out_dir and not os.path.isabs(output):
        output = os.path.join(out_dir, output)
    with open(output, "w", encoding="utf-8") as fh:
        fh.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_build(args) -> int:
    alpha = _resolve_alpha(args)
    form = MatrixForm(args.form)
    if args.emit == "A":
        matrix = a_alpha(alpha, form)
    elif args.emit == "Q":
        matrix = build_Q(args.n)
    elif args.emit == "B":
        matrix = build_B(alpha, args.n)
    elif args.emit == "C":
        matrix = build_C(alpha, args.n)
    else:
        matrix = build_C_block(alpha, args.n)
    payload = {
        "version": __version__,
        "n": args.n,
        "alpha": alpha,
        "emit": args.emit,
        "form": form.value if args.emit == "A" else None,
        "matrix": matrix_to_json(matrix),
    }
    _emit(_json(payload), args.output)
    return EXIT_OK


def _cmd_verify_catalog(args) -> int:
    if not 1 <= args.n <= CATALOG_MAX_ORDER:
        raise ValueError(f"--n must lie in 1..{CATALOG_MAX_ORDER}")
    if args.samples < 1:
        raise ValueError("--samples must be positive")
    reports = []
    ok = True
    for alpha in interval_samples(args.n, args.samples):
        report = verify_catalog_entry(
            args.n, float(alpha),
            tol_residual=args.tol_residual, tol_negative=args.tol_negative,
        )
        ok = ok and report.passed
        entry = report.to_dict()
        entry["version"] = __version__
        reports.append(entry)
    _emit(_json(reports), args.output)
    return EXIT_OK if ok else EXIT_VERIFICATION


def _cmd_feasibility(args) -> int:
    alpha = _resolve_alpha(args)
    tolerances = {"witness": args.tol_witness, "margin": args.tol_margin}
    base = {"version": __version__, "n": args.n, "alpha": alpha, "tolerances": tolerances}
    try:
        outcome = nns_exists(alpha, args.n,
                             tol_witness=args.tol_witness, tol_margin=args.tol_margin)
    except NumericalIndeterminate as exc:
        payload = dict(base, kind="indeterminate", detail=str(exc))
        _emit(_json(payload), args.output)
        return EXIT_INDETERMINATE
    payload = dict(base, **outcome.to_dict())
    _emit(_json(payload), args.output)
    return EXIT_OK


def _sweep_point(alpha: float, n: int, tol_witness: float, tol_margin: float) -> tuple[str, float]:
    try:
        outcome = nns_exists(alpha, n, tol_witness=tol_witness, tol_margin=tol_margin)
    except NumericalIndeterminate:
        return "indeterminate", float("nan")
    if isinstance(outcome, Witness):
        return "witness", outcome.residual
    return "certificate", outcome.margin


def _cmd_sweep(args) -> int:
    if args.points < 2:
        raise ValueError("--points must be at least 2")
    alphas = [
        args.alpha_min + (args.alpha_max - args.alpha_min) * i / (args.points - 1)
        for i in range(args.points)
    ]
    with ThreadPoolExecutor(max_workers=min(8, args.points)) as pool:
        results = list(pool.map(
            lambda a: _sweep_point(a, args.n, args.tol_witness, args.tol_margin), alphas
        ))
    buf = io.StringIO()
    buf.write(f"# paradist {__version__} tol_witness={args.tol_witness!r}"
              f" tol_margin={args.tol_margin!r}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "n", "outcome", "metric"])
    for alpha, (outcome, metric) in zip(alphas, results):
        writer.writerow([repr(alpha), args.n, outcome, repr(metric)])
    _emit(buf.getvalue(), args.output)
    if any(outcome == "indeterminate" for outcome, _ in results):
        return EXIT_INDETERMINATE
    return EXIT_OK


def _cmd_threshold(args) -> int:
    estimate = threshold_bisect(args.n, tol_alpha=args.tol)
    payload = estimate.to_dict()
    payload["version"] = __version__
    payload["tolerances"] = {"alpha": args.tol}
    _emit(_json(payload), args.output)
    return EXIT_OK


def _cmd_necessity(args) -> int:
    if args.points < 0:
        raise ValueError("--points must be nonnegative")
    rows = necessity_scan(args.n, args.points, tol_margin=args.tol_margin)
    anomalies = sum(1 for row in rows if row.get("anomaly"))
    payload = {
        "version": __version__,
        "n": args.n,
        "points": args.points,
        "tolerances": {"margin": args.tol_margin},
        "anomalies": anomalies,
        "rows": rows,
    }
    _emit(_json(payload), args.output)
    return EXIT_OK if anomalies == 0 else EXIT_VERIFICATION


def _cmd_realize(args) -> int:
    if args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
        mats = [matrix_from_json(obj) for obj in data["matrices"]]
    else:
        if args.seed is None:
            raise ValueError("--random-dim requires --seed for reproducibility")
        if args.random_dim < 1 or args.random_count < 1:
            raise ValueError("--random-dim and --random-count must be positive")
        rng = np.random.default_rng(args.seed)
        mats = random_span_set(rng, args.random_dim, args.random_count)
    span = extract_basis(mats)
    pair = realize_channels(span)
    e_ok, e_defect = verify_kraus(pair.e_ops, tol=args.tol)
    f_ok, f_defect = verify_kraus(pair.f_ops, tol=args.tol)
    spans_match = span_equality(pair.e_ops, pair.f_ops, mats)
    identity = product_identity(pair)
    payload = {
        "version": __version__,
        "tolerances": {"kraus": args.tol},
        "scale": pair.scale,
        "rank": pair.rank,
        "basis_size": len(span.basis),
        "e_ops": [matrix_to_json(op) for op in pair.e_ops],
        "f_ops": [matrix_to_json(op) for op in pair.f_ops],
        "verification": {
            "e_defect": e_defect,
            "f_defect": f_defect,
            "kraus_ok": bool(e_ok and f_ok),
            "span_ok": bool(spans_match),
            "product_norm": float(np.linalg.norm(identity)),
        },
    }
    _emit(_json(payload), args.output)
    return EXIT_OK if (e_ok and f_ok and spans_match) else EXIT_VERIFICATION


_COMMANDS = {
    "build": _cmd_build,
    "verify-catalog": _cmd_verify_catalog,
    "feasibility": _cmd_feasibility,
    "sweep": _cmd_sweep,
    "threshold": _cmd_threshold,
    "necessity": _cmd_necessity,
    "realize": _cmd_realize,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NumericalIndeterminate as exc:
        print(f"paradist: indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except NonMonotonePredicate as exc:
        print(f"paradist: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (ValueError, AlphaOutOfInterval, SizeExceeded, OSError, KeyError) as exc:
        print(f"paradist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
