import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .config import CONVENTIONS, LabConfig
from .errors import BadEntry, RingLabError
from .graph import build_graph, graph_to_dict, graph_to_dot
from .rings import (
    EnumerationTask,
    cyclic_ring,
    direct_product,
    dumps_ring,
    enumerate_rings,
    first_row_ring,
    full_matrix_ring,
    iter_rings,
    loads_ring,
    null_ring,
    opposite_ring,
)
from .verify import exit_status, render_table, reports_to_jsonl, run_suite, write_csv

logger = logging.getLogger("ringlab")

FAMILY_ARITY = {"cyclic": "1", "null": "+", "first_row": "2", "full_matrix": "2", "product": "2"}

_LOGGING_CONFIGURED = False


def configure_logging(log_level=logging.INFO, log_dir="logs"):
    """Set up the root ringlab logger to write to stderr and a log file when running as CLI.

    stdout is reserved for JSON, DOT and report output.
    """
    global _LOGGING_CONFIGURED
    if _LOGGING_CONFIGURED:
        logger.setLevel(log_level)
        return
    log_dir = Path(log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / f"ringlab_{time.strftime('%Y%m%d_%H%M%S')}.log"

    logger.setLevel(log_level)

    fmt = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    fh = logging.FileHandler(log_file)
    fh.setFormatter(fmt)

    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(fmt)

    logger.addHandler(fh)
    logger.addHandler(sh)
    _LOGGING_CONFIGURED = True


def parse_orders(text: str) -> range:
    """``"2..8"`` -> ``range(2, 9)``; a single number selects one order."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an order or a range a..b, got {text!r}") from None
    if low < 1 or high < low:
        raise argparse.ArgumentTypeError(f"empty or non-positive order range {text!r}")
    return range(low, high + 1)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _read_single_ring(source: str):
    rings = list(iter_rings(_read_text(source)))
    if len(rings) != 1:
        raise BadEntry(f"expected exactly one ring in {source}, found {len(rings)}")
    return rings[0]


def _int_params(family: str, params: list[str]) -> list[int]:
    try:
        return [int(p) for p in params]
    except ValueError:
        raise BadEntry(f"{family} parameters must be integers, got {' '.join(params)}") from None


def _check_arity(family: str, params: list[str]) -> None:
    arity = FAMILY_ARITY[family]
    if arity == "+" and not params:
        raise BadEntry(f"{family} needs at least one parameter")
    if arity != "+" and len(params) != int(arity):
        raise BadEntry(f"{family} takes {arity} parameter(s), got {len(params)}")


def cmd_build(args, config: LabConfig) -> int:
    family, params = args.family, args.params
    _check_arity(family, params)
    if family == "product":
        ring = direct_product(
            _read_single_ring(params[0]), _read_single_ring(params[1]), config
        )
    else:
        values = _int_params(family, params)
        if family == "cyclic":
            ring = cyclic_ring(values[0])
        elif family == "null":
            ring = null_ring(values, config)
        elif family == "first_row":
            ring = first_row_ring(values[0], values[1], config)
        else:
            ring = full_matrix_ring(values[0], values[1], config)
    if args.opposite:
        ring = opposite_ring(ring)
    sys.stdout.write(dumps_ring(ring) + "\n")
    logger.debug("Built %s of order %d", ring.label, ring.order)
    return 0


def cmd_enumerate(args, config: LabConfig) -> int:
    task = EnumerationTask(order=args.order, dedup=args.dedup)
    count = 0
    if args.emit == "json":
        lines = [dumps_ring(ring) for ring in enumerate_rings(task, config)]
        count = len(lines)
        sys.stdout.write("[\n" + ",\n".join(lines) + "\n]\n" if lines else "[]\n")
    else:
        for ring in enumerate_rings(task, config):
            sys.stdout.write(dumps_ring(ring) + "\n")
            sys.stdout.flush()
            count += 1
    logger.info(
        "Enumerated %d ring(s) of order %d (%d shard(s), %d search node(s))",
        count,
        args.order,
        task.stats.shards,
        task.stats.nodes,
    )
    return 0



def _graph_output(ring, dot: bool) -> str:
    G = build_graph(ring)
    if dot:
        return graph_to_dot(G)
    return json.dumps(graph_to_dict(G), indent=2, sort_keys=True) + "\n"


def cmd_graph(args, config: LabConfig) -> int:
    rings = list(iter_rings(_read_text(args.input)))
    if not rings:
        raise BadEntry("no ring found on input")
    if len(rings) == 1:
        sys.stdout.write(_graph_output(rings[0], args.dot))
        return 0
    for ring in rings:
        if args.dot:
            sys.stdout.write(graph_to_dot(build_graph(ring)))
        else:
            sys.stdout.write(json.dumps(graph_to_dict(build_graph(ring)), sort_keys=True) + "\n")
    return 0


def cmd_export(args, config: LabConfig) -> int:
    ring = loads_ring(_read_text(args.input).strip())
    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(_graph_output(ring, args.format == "dot"), encoding="utf-8")
    logger.info("Exported Γ(%s) as %s to %s", ring.label, args.format, output)
    print(f"Exported: {output.resolve()}", file=sys.stderr)
    return 0


def cmd_verify(args, config: LabConfig) -> int:
    claims = None
    if args.claims:
        claims = [c.strip() for item in args.claims for c in item.split(",") if c.strip()]
    reports = run_suite(
        args.orders,
        families=args.families,
        claims=claims,
        config=config,
        fail_fast=args.fail_fast,
    )
    if args.format == "jsonl":
        sys.stdout.write(reports_to_jsonl(reports, include_timing=args.timings))
    else:
        sys.stdout.write(render_table(reports))
    if args.csv:
        write_csv(reports, args.csv, include_timing=args.timings)
    status = exit_status(reports)
    if status:
        logger.error("Verification found failing claims")
    return status


COMMANDS = {
    "build": cmd_build,
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "export": cmd_export,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="ringlab: finite rings, their directed zero-divisor graphs and claim checks.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "--log-level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level for stderr and the log file",
    )
    parser.add_argument("--log-dir", default="logs", help="Directory for timestamped log files")
    parser.add_argument(
        "--shards", type=int, default=None, help="Worker processes (default: RINGLAB_SHARDS or 1)"
    )
    parser.add_argument(
        "--allow-large",
        action="store_true",
        help="Allow enumeration up to order 16 (slow beyond 8)",
    )
    parser.add_argument(
        "--no-progress", action="store_true", help="Disable progress bars on stderr"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # ------------------------------------------------------------------ build
    build = subparsers.add_parser("build", help="Build a ring from a family and print its JSON.")
    build.add_argument("family", choices=sorted(FAMILY_ARITY), help="Ring family")
    build.add_argument(
        "params",
        nargs="*",
        help=(
            "Family parameters:\n"
            "  cyclic N               Z/N\n"
            "  null D1 [D2 ...]       zero multiplication on Z/D1 + Z/D2 + ...\n"
            "  first_row K N          KxK matrices over Z/N supported on the first row\n"
            "  full_matrix K Q        M_K(F_Q), Q prime\n"
            "  product A.json B.json  direct product of two ring files ('-' for stdin)"
        ),
    )
    build.add_argument("--opposite", action="store_true", help="Emit the opposite ring instead")

    # ------------------------------------------------------------------ enumerate
    enum = subparsers.add_parser(
        "enumerate", help="Emit every ring of one order as JSON lines."
    )
    enum.add_argument("order", nargs="?", type=int, help="Ring order (same as --order)")
    enum.add_argument("--order", dest="order_option", type=int, metavar="N", help="Ring order")
    dedup = enum.add_mutually_exclusive_group()
    dedup.add_argument(
        "--dedup",
        dest="dedup",
        action="store_true",
        default=True,
        help="Emit one ring per isomorphism class (default)",
    )
    dedup.add_argument(
        "--raw",
        "--no-dedup",
        dest="dedup",
        action="store_false",
        help="Emit every structure found instead of one ring per isomorphism class",
    )
    enum.add_argument(
        "--shards",
        dest="command_shards",
        type=int,
        default=None,
        metavar="K",
        help="Worker processes for this run (overrides the global --shards)",
    )
    enum.add_argument(
        "--emit",
        choices=["jsonl", "json"],
        default="jsonl",
        help="jsonl: one ring per line as it is produced; json: a single array",
    )

    # ------------------------------------------------------------------ graph
    graph = subparsers.add_parser("graph", help="Print Γ(R) for ring JSON on stdin or a file.")
    graph.add_argument("input", nargs="?", default="-", help="Ring JSON or JSONL file ('-' = stdin)")
    graph.add_argument("--dot", action="store_true", help="Emit Graphviz DOT instead of JSON")

    # ------------------------------------------------------------------ export
    export = subparsers.add_parser("export", help="Write Γ(R) of one ring to a DOT or JSON file.")
    export.add_argument("input", help="Ring JSON file ('-' = stdin)")
    export.add_argument("-o", "--output", required=True, help="Output file path")
    export.add_argument("--format", choices=["dot", "json"], default="dot")

    # ------------------------------------------------------------------ verify
    verify = subparsers.add_parser("verify", help="Check the claims on enumerated and built rings.")
    verify.add_argument(
        "--orders", type=parse_orders, default=parse_orders("2..6"), help="Orders, e.g. 2..8"
    )
    verify.add_argument(
        "--claims",
        nargs="+",
        default=None,
        help="Only these claim ids (space or comma separated), e.g. Thm2.4 Cor4.9",
    )
    verify.add_argument("--convention", choices=CONVENTIONS, default="both")
    verify.add_argument(
        "--shards",
        dest="command_shards",
        type=int,
        default=None,
        metavar="K",
        help="Worker processes for this run (overrides the global --shards)",
    )
    verify.add_argument("--fail-fast", action="store_true", help="Stop at the first failing report")
    verify.add_argument(
        "--families",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Include M_2(F_2) and the first-row rings",
    )
    verify.add_argument("--format", choices=["table", "jsonl"], default="table")
    verify.add_argument("--csv", default=None, help="Also write the report table to this CSV file")
    verify.add_argument(
        "--timings", action="store_true", help="Include per-report seconds in the output"
    )
    return parser


def _resolve_order(parser: argparse.ArgumentParser, args) -> int:
    given = {value for value in (args.order, args.order_option) if value is not None}
    if not given:
        parser.error("enumerate needs an order: ORDER or --order N")
    if len(given) > 1:
        parser.error(f"conflicting orders {args.order} and --order {args.order_option}")
    return given.pop()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate":
        args.order = _resolve_order(parser, args)
    configure_logging(getattr(logging, args.log_level), args.log_dir)
    shards = getattr(args, "command_shards", None)

    try:
        config = LabConfig.from_env(
            shards=shards if shards is not None else args.shards,

            allow_large_enumeration=args.allow_large,
            progress=not args.no_progress,
            convention=getattr(args, "convention", None),
            log_level=getattr(logging, args.log_level),
            log_dir=args.log_dir,
        )
        status = COMMANDS[args.command](args, config)
    except RingLabError as e:
        logger.error(f"Command failed: {e}")
        sys.exit(e.exit_code)
    except OSError as e:
        logger.error(f"Cannot read or write {e.filename}: {e.strerror}")
        sys.exit(2)
    except Exception as e:
        logger.error(f"Command failed: {e}")
        sys.exit(1)
    sys.exit(status)


if __name__ == "__main__":
    main()
