"""Command-line entry point for the matrix-product code workbench.

Run with:
    python -m mpcodes <command> [options]

Commands:
    classify      Classify an MP code from its spec file
    hull-dim      Hull dimension by formula, cross-checked by brute force
    build         Write the generator of the MP code
    bound         Lower bound on the minimum distance
    involutions   List the involutions of {1..k}
    table         Manners to obtain a Hermitian property, by involution
    search        Scan pools of matrices and codes for target flags
    verify        Run the formula-vs-brute-force suite
    qparams       Quantum code parameters of a dual-containing code

Results go to stdout; structured logs go to stderr.

Environment variables:
    MPCODES_LOG_LEVEL       Logging level (default: WARNING)
    MPCODES_LOG_FORMAT      json or text (default: json)
    MPCODES_DISTANCE_CAP    Codewords enumerated by min_distance (default: 2^24)
    MPCODES_ORACLE_CAP      Vectors per brute-force scan (default: 2^20)
    MPCODES_SEED            Seed for sampled pools and trials (default: 0)

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

import argparse
import sys
from typing import Optional

from mpcodes import __version__
from mpcodes.codes import LinearCode
from mpcodes.config import get_settings
from mpcodes.errors import EnumerationCapError, FormatParseError, InternalInconsistencyError, MPCodesError
from mpcodes.formats import (
    dump,
    format_code,
    iter_blocks,
    load_code,
    load_mp_spec,
    parse_field_selector,
    parse_matrix,
    read_text,
)
from mpcodes.matrix import ExactMatrix
from mpcodes.models import MP_FLAGS, CodeProperty, DistanceBound, sorted_flags
from mpcodes.mp import (
    ClassificationReport,
    MPCodeSpec,
    build,
    classify,
    classify_explicit,
    distance_bound,
    enumerate_manners,
    hull_dim_formula,
    quantum_params,
)
from mpcodes.observability import configure_logging, get_logger
from mpcodes.oracle import brute_hull_dim, oracle_feasible
from mpcodes.search import SearchConfig, regenerate_table1, search_hdc
from mpcodes.special import enumerate_involutions, involution_count
from mpcodes.verify import PROPERTIES, run_suite

logger = get_logger(__name__)


def _emit(lines: list[str]) -> None:
    for line in lines:
        print(line)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _seed(args: argparse.Namespace) -> int:
    return get_settings().seed if args.seed is None else args.seed


def _field_suffix(spec: MPCodeSpec) -> str:
    return f"_{spec.spec.order}"


def _bound_or_none(spec: MPCodeSpec, cap: Optional[int]) -> Optional[DistanceBound]:
    try:
        return distance_bound(spec, cap=cap)
    except EnumerationCapError as e:
        logger.info("distance_bound_skipped", reason=str(e))
        return None


def _parameters(spec: MPCodeSpec, report: ClassificationReport, bound: Optional[DistanceBound]) -> str:
    b = "?" if bound is None else str(bound.value)
    return f"[{spec.length}, {report.mp_dim}, ≥{b}]{_field_suffix(spec)}"


# =============================================================================
# Commands
# =============================================================================


def cmd_classify(args: argparse.Namespace) -> int:
    """Classify the MP code described by a spec file.

    Args:
        args: Command line arguments

    Returns:
        Exit code (0 for success)
    """
    spec = load_mp_spec(args.spec)
    report = classify_explicit(spec) if args.explicit else classify(spec)
    bound = _bound_or_none(spec, args.distance_cap)

    if args.format == "machine":
        lines = [
            f"tau={report.tau}",
            f"method={report.method}",
            f"hull_dim={report.hull_dim}",
            f"mp_dim={report.mp_dim}",
            f"mp_dual_dim={report.mp_dual_dim}",
        ]
        lines += [f"flag.{f}={_bool(f in report.flags)}" for f in MP_FLAGS]
        lines += [f"ahdc_residual={report.ahdc_residual}", f"ahso_residual={report.ahso_residual}"]
        if report.ahdc_witness is not None:
            lines.append(f"ahdc_witness={report.ahdc_witness}")
        if report.ahso_witness is not None:
            lines.append(f"ahso_witness={report.ahso_witness}")
        lines += [f"obstruction.{o.target}={o.rule}" for o in report.obstructions]
        if bound is not None:
            lines += [f"bound={bound.value}", f"bound.method={bound.method}"]
        _emit(lines)
        return 0

    flags = ", ".join(str(f) for f in sorted_flags(report.flags)) or "none"
    lines = [
        f"MP code {_parameters(spec, report, bound)} over {spec.spec}, tau={report.tau} ({report.method})",
        f"flags: {flags}",
        f"hull_dim={report.hull_dim}  dim={report.mp_dim}  dual_dim={report.mp_dual_dim}",
        "",
        " i | tau(i) | dim C_i | dim C_tau(i)^⊥H | meet | C_tau(i)^⊥H ⊆ C_i | C_i ⊆ C_tau(i)^⊥H",
    ]
    for e in report.evidence:
        lines.append(
            f"{e.index:>2} | {e.partner:>6} | {e.dimension:>7} | {e.partner_dual_dimension:>15} | "
            f"{e.meet_dimension:>4} | {_bool(e.dual_contained):>17} | {_bool(e.self_orthogonal)}"
        )
    for o in report.obstructions:
        lines.append(f"{o.target} ruled out: {o.rule} ({o.detail})")
    if bound is not None:
        lines.append(f"distance ≥ {bound.value} ({bound.method})")
    _emit(lines)
    return 0


def cmd_hull_dim(args: argparse.Namespace) -> int:
    """Hull dimension from the formula, plus the oracle value when feasible."""
    spec = load_mp_spec(args.spec)
    formula = hull_dim_formula(spec)
    code = build(spec)
    oracle: Optional[int] = None
    if oracle_feasible(code, args.oracle_cap):
        oracle = brute_hull_dim(code, args.oracle_cap)
        if oracle != formula:
            raise InternalInconsistencyError(f"formula gives {formula}, brute force {oracle}")
    _emit([f"hull_dim={formula}", f"oracle={'skipped' if oracle is None else oracle}"])
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    """Write the canonical generator of the MP code."""
    code = build(load_mp_spec(args.spec))
    text = format_code(code)
    if args.output:
        path = dump(text, args.output)
        logger.info("generator_written", path=str(path), dimension=code.dimension)
        _emit([f"written={path}", f"n={code.length}", f"dim={code.dimension}"])
    else:
        sys.stdout.write(text)
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    """Minimum-distance lower bound with the rule that produced it."""
    spec = load_mp_spec(args.spec)
    bound = distance_bound(spec, cap=args.distance_cap)
    lines = [f"bound={bound.value}", f"bound.method={bound.method}"]
    if bound.prefix_bound is not None:
        lines.append(f"bound.prefix={bound.prefix_bound}")
    if bound.nsc_bound is not None:
        lines.append(f"bound.nsc={bound.nsc_bound}")
    lines += [f"d.{i}={d}" for i, d in enumerate(bound.constituent_distances, start=1)]
    _emit(lines)
    return 0


def cmd_involutions(args: argparse.Namespace) -> int:
    involutions = enumerate_involutions(args.k)
    _emit([str(p) for p in involutions])
    _emit([f"count={involution_count(args.k)}", f"count.nontrivial={involution_count(args.k, False)}"])
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    target = CodeProperty(args.target)
    if args.format == "human":
        sys.stdout.write(regenerate_table1(args.k, target))
        return 0
    for m in enumerate_manners(args.k, target):
        print(f"class={m.class_number} tau={m.tau} conditions={'; '.join(m.requirements)}")
    return 0


def _load_matrices(paths: list[str]) -> tuple[ExactMatrix, ...]:
    matrices = []
    for path in paths:
        matrices.extend(parse_matrix(block) for block in iter_blocks(read_text(path)))
    return tuple(matrices)


def cmd_search(args: argparse.Namespace) -> int:
    """Scan matrix and code pools for MP codes with the target flags."""
    spec = parse_field_selector(args.field)
    matrices = _load_matrices(args.matrix_file or [])
    codes: tuple[LinearCode, ...] = tuple(load_code(p) for p in args.code_file or [])
    try:
        config = SearchConfig(
            spec=spec,
            n=args.n,
            k=args.k,
            targets=frozenset(CodeProperty(t) for t in (args.target or ["HDC"])),
            matrix_source="explicit" if matrices else args.matrices,
            matrices=matrices,
            code_source="explicit" if codes else args.pool,
            codes=codes,
            sample_size=args.pool_size,
            seed=_seed(args),
            limit=args.limit,
            verify=not args.no_verify,
            oracle_cap=args.oracle_cap,
        )
    except ValueError as e:
        raise FormatParseError(f"invalid search configuration: {e}") from e

    hits = search_hdc(config)
    if args.format == "machine":
        _emit([h.to_line() for h in hits])
    else:
        for i, h in enumerate(hits, start=1):
            flags = ", ".join(str(f) for f in sorted_flags(h.flags))
            print(
                f"{i:>4}. {h.parameters}_{spec.order} tau={h.tau} flags={flags} "
                f"A={h.matrix.to_ints()} nsc={_bool(h.nsc)} verified={_bool(h.verified)}"
            )
    print(f"hits={len(hits)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the cross-check suite; exit 1 when any property fails."""
    result = run_suite(
        seed=_seed(args),
        trials=args.trials,
        out_dir=args.out_dir,
        properties=args.property,
        oracle_cap=args.oracle_cap,
    )
    for o in result.outcomes:
        line = f"property={o.name} passed={_bool(o.passed)} trials={o.trials}"
        if not o.passed:
            line += f" detail={o.detail!r}"
            if o.counterexample_path:
                line += f" counterexample={o.counterexample_path}"
        print(line)
    print(f"suite={'pass' if result.success else 'fail'}")
    return 0 if result.success else 1


def cmd_qparams(args: argparse.Namespace) -> int:
    params = quantum_params(load_code(args.code), cap=args.distance_cap)
    if args.format == "machine":
        _emit(
            [
                f"quantum.n={params.n}",
                f"quantum.k={params.k}",
                f"quantum.d_lower={params.d_lower}",
                f"quantum.q={params.q}",
                f"provenance={params.provenance}",
            ]
        )
    else:
        _emit([f"{params} (provenance: {params.provenance})"])
    return 0


# =============================================================================
# Parser
# =============================================================================


def create_parser() -> argparse.ArgumentParser:
    """Create command line argument parser.

    Returns:
        Configured ArgumentParser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["human", "machine"],
        default="human",
        help="Output format (default: human)",
    )
    common.add_argument("--seed", type=int, default=None, help="Seed for all randomness")
    common.add_argument("--distance-cap", type=int, default=None, help="Codeword enumeration cap")
    common.add_argument("--oracle-cap", type=int, default=None, help="Brute-force scan cap")

    parser = argparse.ArgumentParser(
        prog="mpcodes",
        description="Matrix-product codes over GF(q²): hulls, classification and search",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m mpcodes classify spec.txt --format machine
  python -m mpcodes hull-dim spec.txt
  python -m mpcodes involutions 4
  python -m mpcodes table 3
  python -m mpcodes search --field 4 --n 2 --k 2 --limit 10
  python -m mpcodes verify --trials 100 --out-dir counterexamples
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    classify_parser = subparsers.add_parser("classify", parents=[common], help="Classify an MP code")
    classify_parser.add_argument("spec", help="MP spec file")
    classify_parser.add_argument(
        "--explicit",
        action="store_true",
        help="Use the 2-cycle / fixed-point classifier",
    )
    classify_parser.set_defaults(func=cmd_classify)

    hull_parser = subparsers.add_parser("hull-dim", parents=[common], help="Hull dimension")
    hull_parser.add_argument("spec", help="MP spec file")
    hull_parser.set_defaults(func=cmd_hull_dim)

    build_parser = subparsers.add_parser("build", parents=[common], help="Generator of the MP code")
    build_parser.add_argument("spec", help="MP spec file")
    build_parser.add_argument("-o", "--output", help="Write the code file here instead of stdout")
    build_parser.set_defaults(func=cmd_build)

    bound_parser = subparsers.add_parser("bound", parents=[common], help="Distance lower bound")
    bound_parser.add_argument("spec", help="MP spec file")
    bound_parser.set_defaults(func=cmd_bound)

    involutions_parser = subparsers.add_parser(
        "involutions", parents=[common], help="List involutions of {1..k}"
    )
    involutions_parser.add_argument("k", type=int, help="Number of points")
    involutions_parser.set_defaults(func=cmd_involutions)

    table_parser = subparsers.add_parser("table", parents=[common], help="Manners table for k")
    table_parser.add_argument("k", type=int, help="Number of constituents (2..8)")
    table_parser.add_argument(
        "--target",
        choices=[str(f) for f in MP_FLAGS],
        default="HDC",
        help="Property to tabulate (default: HDC)",
    )
    table_parser.set_defaults(func=cmd_table)

    search_parser = subparsers.add_parser("search", parents=[common], help="Search for MP codes")
    search_parser.add_argument("--field", required=True, help="Field order (4) or 'p=3,m=2'")
    search_parser.add_argument("--n", type=int, required=True, help="Constituent length")
    search_parser.add_argument("--k", type=int, required=True, help="Number of constituents")
    search_parser.add_argument(
        "--target",
        action="append",
        choices=[str(f) for f in MP_FLAGS],
        help="Required flag, repeatable (default: HDC)",
    )
    search_parser.add_argument(
        "--pool",
        choices=["all", "random"],
        default="all",
        help="Constituent pool (default: all codes of length n)",
    )
    search_parser.add_argument("--pool-size", type=int, default=64, help="Size of sampled pools")
    search_parser.add_argument(
        "--matrices",
        choices=["exhaustive", "sampled"],
        default="exhaustive",
        help="Defining-matrix pool (default: exhaustive)",
    )
    search_parser.add_argument("--matrix-file", action="append", help="Explicit matrix file, repeatable")
    search_parser.add_argument("--code-file", action="append", help="Explicit code file, repeatable")
    search_parser.add_argument("--limit", type=int, default=None, help="Stop after this many hits")
    search_parser.add_argument("--no-verify", action="store_true", help="Skip the oracle replay")
    search_parser.set_defaults(func=cmd_search)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run the cross-check suite")
    verify_parser.add_argument("--trials", type=int, default=None, help="Trials per randomized property")
    verify_parser.add_argument("--out-dir", default=None, help="Directory for counterexample files")
    verify_parser.add_argument(
        "--property",
        action="append",
        choices=list(PROPERTIES),
        help="Run only this property, repeatable",
    )
    verify_parser.set_defaults(func=cmd_verify)

    qparams_parser = subparsers.add_parser("qparams", parents=[common], help="Quantum code parameters")
    qparams_parser.add_argument("code", help="Code file")
    qparams_parser.set_defaults(func=cmd_qparams)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point.

    Returns:
        Exit code (0 success, 1 domain error, 2 usage or parse error)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    settings = get_settings()
    configure_logging(log_level=settings.log_level, json_format=settings.json_logs, _silent=True)
    logger.info("application_started", command=args.command, log_level=settings.log_level)

    try:
        exit_code = args.func(args)
    except FormatParseError as e:
        _emit([f"error={e.code}", f"message={e}"])
        logger.warning("input_rejected", command=args.command, error=str(e))
        return 2
    except MPCodesError as e:
        _emit([f"error={e.code}", f"message={e}"])
        logger.warning("command_failed", command=args.command, error_code=e.code, error=str(e))
        return 1
    except Exception as e:
        logger.exception("application_error", command=args.command, error=str(e))
        return 1

    if exit_code == 0:
        logger.info("application_completed", command=args.command)
    else:
        logger.error("application_failed", command=args.command, exit_code=exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
