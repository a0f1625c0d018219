"""
FidelityEq - Command Line Interface
check / scan / generate / selftest / export

Reports go to stdout as JSON, logs to stderr.
Exit codes: 0 ok, 1 input error, 2 inconsistency or failed check.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from core import (
    DEFAULT_DIM_B,
    DEFAULT_SEED,
    DEFAULT_TOL,
    EXIT_INCONSISTENT,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    NAMED_STATES_KEYS,
    BipartitePureState,
    EqualityFamilyParams,
    ScanJob,
    analyze_pair,
    canonical_frame,
    error_boundary,
    generate_equality_state,
    generate_separable_psi_family,
    get_named_amplitudes,
    is_product_state,
    logger,
    new_state,
    run_selftest,
    storage,
)


def _emit(payload: Dict[str, Any]) -> None:
    print(json.dumps(payload))
    sys.stdout.flush()


# ===================================================================
# COMMANDS
# ===================================================================

@error_boundary(default_return=EXIT_INPUT_ERROR)
def cmd_check(args: argparse.Namespace) -> int:
    """Fidelities and both equality verdicts for a state pair"""
    psi = storage.read_state(args.psi, auto_normalize=args.auto_normalize)
    phi = storage.read_state(args.phi, auto_normalize=args.auto_normalize)
    analysis = analyze_pair(psi, phi, args.tol)
    _emit(analysis.to_dict())

    if not analysis.consistent:
        logger.warning(
            f"[check] Verdicts disagree: numeric={analysis.verdict_numeric} "
            f"conditions={analysis.report.verdict} gap={analysis.fidelities.gap:.3e}"
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


@error_boundary(default_return=EXIT_INPUT_ERROR)
def cmd_scan(args: argparse.Namespace) -> int:
    """Haar-random pairs -> CSV rows plus a summary"""
    job = ScanJob(args.dim_b, args.samples, args.seed, args.tol, workers=args.workers)
    records = job.run()
    storage.write_csv(args.out, (r.to_row() for r in records))

    summary = job.summary()
    _emit(summary.to_dict())
    if not summary.passed:
        logger.warning(
            f"[scan] {summary.violations} violations, {summary.disagreements} disagreements"
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


@error_boundary(default_return=EXIT_INPUT_ERROR)
def cmd_generate(args: argparse.Namespace) -> int:
    """
    Equality-family member for the parameters in args.params. psi is the
    Schmidt-form state of the canonical frame (|11> for the separable family).
    """
    params = storage.read_params(args.params)
    if isinstance(params, EqualityFamilyParams):
        frame = canonical_frame(params.lam, args.dim_b)
        phi = generate_equality_state(params, frame)
    else:
        frame = canonical_frame(0.0, args.dim_b)
        phi = generate_separable_psi_family(params, args.dim_b)
    psi = BipartitePureState(frame.reconstruct())

    analysis = analyze_pair(psi, phi, args.tol)
    report = {
        "fGlobal": analysis.fidelities.f_global,
        "fLocal": analysis.fidelities.f_local,
        "product": is_product_state(phi),
        "conditions": analysis.report.to_dict(),
    }
    storage.write_json(args.out, {
        "psi": storage.state_payload(psi),
        "phi": storage.state_payload(phi),
        **report,
    })
    _emit(report)
    logger.info(f"[generate] Wrote {args.out}")

    if not analysis.report.verdict:
        logger.warning("[generate] Generated state fails the equality conditions")
        return EXIT_INCONSISTENT
    return EXIT_OK


@error_boundary(default_return=EXIT_INPUT_ERROR)
def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(tol=args.tol, samples=args.samples, inject_fault=args.inject_fault)
    for result in results:
        _emit(result.to_dict())
    return EXIT_OK if all(r.passed for r in results) else EXIT_INCONSISTENT


@error_boundary(default_return=EXIT_INPUT_ERROR)
def cmd_export(args: argparse.Namespace) -> int:
    """Write a named reference state as state JSON"""
    amplitudes = get_named_amplitudes(args.name, args.dim_b)
    storage.write_state(args.out, new_state(args.dim_b, amplitudes))
    logger.info(f"[export] {args.name} (dimB={args.dim_b}) -> {args.out}")
    return EXIT_OK


# ===================================================================
# PARSER
# ===================================================================

class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for inconsistencies"""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _dim_b(raw: str) -> int:
    value = _positive_int(raw)
    if value < 2:
        raise argparse.ArgumentTypeError(f"dimB must be >= 2, got {value}")
    return value


def _positive_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {raw!r}")
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {raw}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fidelityeq", description="Global vs local fidelity of 2 x d pure states.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Compare a state pair.")
    check.add_argument("psi", help="State JSON for psi.")
    check.add_argument("phi", help="State JSON for phi.")
    check.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="Condition tolerance.")
    check.add_argument("--auto-normalize", action="store_true", help="Rescale states whose norm is off.")
    check.set_defaults(handler=cmd_check)

    scan = sub.add_parser("scan", help="Scan Haar-random pairs.")
    scan.add_argument("--dim-b", type=_dim_b, default=DEFAULT_DIM_B)
    scan.add_argument("--samples", type=_positive_int, required=True)
    scan.add_argument("--seed", type=int, default=DEFAULT_SEED)
    scan.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    scan.add_argument("--out", required=True, help="CSV output path.")
    scan.add_argument("--workers", type=_positive_int, default=None, help="Process pool size (default: SCAN_WORKERS).")
    scan.set_defaults(handler=cmd_scan)

    generate = sub.add_parser("generate", help="Build an equality-family state.")
    generate.add_argument("params", help="Family parameter JSON.")
    generate.add_argument("--dim-b", type=_dim_b, default=DEFAULT_DIM_B)
    generate.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    generate.add_argument("--out", required=True, help="Output JSON path.")
    generate.set_defaults(handler=cmd_generate)

    selftest = sub.add_parser("selftest", help="Run the fixed-seed self-test suites.")
    selftest.add_argument("--tol", type=_positive_float, default=None, help="Replace every suite threshold.")
    selftest.add_argument("--samples", type=_positive_int, default=None, help="Samples per suite.")
    selftest.add_argument("--inject-fault", action="store_true", help="Flip the closed form's cross-term sign.")
    selftest.set_defaults(handler=cmd_selftest)

    export = sub.add_parser("export", help="Write a named reference state.")
    export.add_argument("name", choices=NAMED_STATES_KEYS)
    export.add_argument("--dim-b", type=_dim_b, default=DEFAULT_DIM_B)
    export.add_argument("--out", required=True)
    export.set_defaults(handler=cmd_export)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
