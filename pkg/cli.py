"""
Command-line front end for curvkit.

Commands:
    classify <file|catalog:name>     full classification report
    invariants <file|catalog:name>   curvature invariants per point
    identities <file|catalog:name>   quadratic identity suite (--force for non-2-symmetric inputs)
    holonomy <file|catalog:name>     infinitesimal holonomy kernels
    catalog list | catalog emit <name>

Exit codes: 0 all findings pass, 1 a finding or identity failed, 2 usage or
parse error, 3 numeric error.
"""

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from catalog import builtin_metrics, get_entry
from classifier import aggregate
from config import APP_CONFIG, RUN_DEFAULTS, SAMPLING_CONFIG, SUCCESS_MESSAGES, TOLERANCE_CONFIG, RunConfig, validate_config
from exceptions import EXIT_FINDINGS_FAILED, EXIT_OK, CurvkitError, UsageError
from formatters.json_formatter import catalog_payload, render_json, report_payload
from formatters.text_formatter import render_catalog_list, render_text
from logger import get_logger, log_function_call
from metric_dsl import MetricSpec, emit_metric_file, parse_metric_file
from validators import MetricFileValidator, MetricSpecValidator, RunConfigValidator

logger = get_logger()

CATALOG_PREFIX = "catalog:"
REPORT_COMMANDS = ("classify", "invariants", "identities", "holonomy")


class CurvkitArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> CurvkitArgumentParser:
    parser = CurvkitArgumentParser(prog=APP_CONFIG["name"], description="Curvature classification of metrics")
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_CONFIG['version']}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CurvkitArgumentParser)

    for command in REPORT_COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("target", help="metric file path or catalog:<name>")
        p.add_argument("--points", type=int, default=SAMPLING_CONFIG["points"])
        p.add_argument("--seed", type=int, default=SAMPLING_CONFIG["seed"])
        p.add_argument("--order", type=int, default=RUN_DEFAULTS["order"])
        p.add_argument("--tol-rel", type=float, default=TOLERANCE_CONFIG["tol_rel"])
        p.add_argument("--tol-abs", type=float, default=TOLERANCE_CONFIG["tol_abs"])
        p.add_argument("--k", type=int, default=None,
                       help="highest k tested for nabla^k R = 0 (k <= 2 tests up to min(2, order - 2))")
        p.add_argument("--json", action="store_true", help="write the JSON report")
        p.add_argument("--force", action="store_true", help="run identities on points that are not 2-symmetric")
        p.add_argument("--workers", type=int, default=None, help="worker threads (default CURVKIT_THREADS)")
        p.add_argument("--progress", action="store_true", help="progress bar on stderr")
        p.add_argument("--color", action="store_true", help="colour finding lines")

    p_catalog = sub.add_parser("catalog")
    p_catalog.add_argument("action", choices=["list", "emit"])
    p_catalog.add_argument("name", nargs="?")
    p_catalog.add_argument("--json", action="store_true")
    return parser


def load_target(target: str) -> MetricSpec:
    """Catalog entry for ``catalog:<name>``, otherwise the parsed metric file at ``target``."""
    if target.startswith(CATALOG_PREFIX):
        return get_entry(target[len(CATALOG_PREFIX):])

    check = MetricFileValidator.validate_path(target)
    if not check['valid']:
        raise UsageError("; ".join(check['errors']))
    for warning in check['warnings']:
        logger.warning(warning)
    with open(target, encoding="utf-8") as handle:
        spec = parse_metric_file(handle.read())

    check = MetricSpecValidator.validate(spec)
    if not check['valid']:
        raise UsageError("; ".join(check['errors']))
    return spec


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    k_depth = args.k if args.k is not None else max(0, min(RUN_DEFAULTS["k_depth"], args.order - 2))
    run_config = RunConfig(
        command=args.command,
        target=args.target,
        points=args.points,
        seed=args.seed,
        order=args.order,
        tol_rel=args.tol_rel,
        tol_abs=args.tol_abs,
        json=args.json,
        k_depth=k_depth,
        force=args.force,
        workers=args.workers,
        progress=args.progress,
    )
    check = RunConfigValidator.validate(run_config)
    if not check['valid']:
        raise UsageError("; ".join(check['errors']))
    for warning in check['warnings']:
        logger.warning(warning)
    return run_config


@log_function_call("report command")
def _cmd_report(args: argparse.Namespace) -> Tuple[int, str]:
    run_config = run_config_from_args(args)
    spec = load_target(args.target)
    report = aggregate(spec, run_config, with_identities=args.command == "identities")
    if args.json:
        output = render_json(report_payload(report))
    else:
        output = render_text(report, args.command, color=args.color)
    return (EXIT_FINDINGS_FAILED if report.failed else EXIT_OK), output


@log_function_call("catalog command")
def _cmd_catalog(args: argparse.Namespace) -> Tuple[int, str]:
    entries = builtin_metrics()
    if args.action == "list":
        if args.json:
            return EXIT_OK, render_json(catalog_payload(list(entries), entries))
        return EXIT_OK, render_catalog_list(entries)
    if not args.name:
        raise UsageError("catalog emit needs an entry name")
    spec = get_entry(args.name)
    logger.info(SUCCESS_MESSAGES["catalog_emitted"].format(name=args.name))
    return EXIT_OK, emit_metric_file(spec)


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """Run one command; returns the exit code and the text destined for stdout (or stderr on error)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return exc.exit_code, f"error: {exc.message}\n"
    except SystemExit as exc:
        # --help and --version print and exit on their own
        return int(exc.code or 0), ""

    try:
        if args.command == "catalog":
            return _cmd_catalog(args)
        return _cmd_report(args)
    except CurvkitError as exc:
        logger.error(f"{args.command} failed: {exc.message}")
        return exc.exit_code, f"error: {exc.message}\n"


def main(argv: Optional[List[str]] = None) -> int:
    config_check = validate_config()
    if config_check['valid']:
        logger.debug(SUCCESS_MESSAGES["config_validated"])
    for issue in config_check['issues']:
        logger.warning(f"configuration: {issue}")
    code, output = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FINDINGS_FAILED) else sys.stderr
    stream.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
