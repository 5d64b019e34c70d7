import argparse
import sys
import typing as ty

from madcolor import __version__
from madcolor._logs import logger, set_verbose
from madcolor._types import ColoringMode, PalettePolicy, RunConfig
from madcolor.bench import HEADER, growth_exponent, run_bench
from madcolor.colorer import colorer
from madcolor.errors import (
    ArgumentMissingError,
    GraphError,
    GraphFileError,
    InvariantBreachError,
    MadColorError,
    PreconditionViolatedError,
)
from madcolor.generators import GeneratorKind, generate
from madcolor.io import (
    format_coloring,
    format_graph,
    read_coloring,
    read_graph,
    write_coloring,
    write_stats,
)
from madcolor.oracle import validate_coloring

EXIT_OK: ty.Final = 0
EXIT_INVALID: ty.Final = 1
EXIT_PARSE: ty.Final = 2
EXIT_PRECONDITION: ty.Final = 3
EXIT_INTERNAL: ty.Final = 4

MODES: ty.Final = {"rand": ColoringMode.RANDOMIZED, "det": ColoringMode.DETERMINISTIC}
POLICIES: ty.Final = {
    "delta": PalettePolicy.EXACT_DELTA,
    "delta1": PalettePolicy.DELTA_PLUS_ONE,
    "auto": PalettePolicy.AUTO,
}


def exit_code_for(exc: MadColorError) -> int:
    match exc:
        case GraphFileError() | GraphError() | ArgumentMissingError():
            return EXIT_PARSE
        case PreconditionViolatedError():
            return EXIT_PRECONDITION
        case _:
            return EXIT_INTERNAL


def _run_config(args: argparse.Namespace) -> RunConfig:
    mode = MODES[args.mode]
    policy = POLICIES[args.colors]
    workers = args.workers
    if mode is ColoringMode.RANDOMIZED:
        if args.seed is None:
            raise ArgumentMissingError("--seed is required with --mode rand")
        return RunConfig.randomized(args.seed, palette_policy=policy, workers=workers)
    return RunConfig.deterministic(palette_policy=policy, workers=workers)


def cmd_color(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    cfg = _run_config(args)
    coloring, report = colorer.color(g, cfg)
    outcome = validate_coloring(g, coloring, coloring.palette_size)
    if not outcome.ok:
        raise InvariantBreachError(
            f"produced coloring failed validation: {outcome.violations[0]}"
        )
    if args.out:
        write_coloring(coloring, args.out)
    else:
        sys.stdout.write(format_coloring(g, coloring.colors, coloring.palette_size))
    if args.stats:
        write_stats(report, args.stats)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    parsed = read_coloring(args.coloring, g)
    outcome = validate_coloring(g, parsed.colors, parsed.palette_size)
    if outcome.ok:
        print(f"ok: {g.edge_count} edges, palette {parsed.palette_size}")
        return EXIT_OK
    for violation in outcome.violations:
        print(violation)
    return EXIT_INVALID


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(GeneratorKind(args.kind), args.params, seed=args.seed)
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(
        GeneratorKind(args.family),
        args.sizes,
        MODES[args.mode],
        repeats=args.repeats,
        k=args.k,
        seed=args.seed,
    )
    print(HEADER)
    for row in rows:
        print(row.format())
    alpha = growth_exponent(rows)
    print(f"alpha = {alpha:.3f}" if alpha is not None else "alpha = n/a")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="madcolor", description="Edge coloring of sparse graphs with max degree colors"
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="color the edges of a graph file")
    color.add_argument("input")
    color.add_argument("--mode", choices=sorted(MODES), default="det")
    color.add_argument("--seed", type=int, default=None)
    color.add_argument("--colors", choices=sorted(POLICIES), default="auto")
    color.add_argument("--stats", default=None, help="write a json run report here")
    color.add_argument("--out", default=None, help="coloring file; stdout when omitted")
    color.add_argument("--workers", type=int, default=1)
    color.set_defaults(handler=cmd_color)

    validate = sub.add_parser("validate", help="check a coloring file against its graph")
    validate.add_argument("graph")
    validate.add_argument("coloring")
    validate.set_defaults(handler=cmd_validate)

    gen = sub.add_parser("gen", help="write a generated graph to stdout")
    gen.add_argument("kind", choices=[k.value for k in GeneratorKind])
    gen.add_argument("params", type=int, nargs="+")
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(handler=cmd_gen)

    bench = sub.add_parser("bench", help="time coloring on growing generated graphs")
    bench.add_argument(
        "--family",
        choices=[GeneratorKind.KDEGENERATE.value, GeneratorKind.KFOREST.value],
        default=GeneratorKind.KDEGENERATE.value,
    )
    bench.add_argument("--sizes", type=int, nargs="+", default=[1 << 12, 1 << 13, 1 << 14])
    bench.add_argument("--mode", choices=sorted(MODES), default="det")
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--k", type=int, default=2)
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: ty.Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    set_verbose(args.verbose)
    try:
        return args.handler(args)
    except MadColorError as exc:
        code = exit_code_for(exc)
        logger.error("%s: %s", type(exc).__name__, exc)
        return code
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_PARSE
