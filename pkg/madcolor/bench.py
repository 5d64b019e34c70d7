import typing as ty
from dataclasses import dataclass

import numpy as np

from madcolor._logs import logger
from madcolor._types import ColoringMode, PalettePolicy, RunConfig
from madcolor.colorer import colorer, mad_upper_bound_from_degeneracy
from madcolor.errors import PreconditionViolatedError
from madcolor.generators import GeneratorKind, kdegenerate, kforest
from madcolor.graph import Graph
from madcolor.sparsity import degeneracy_ordering


@dataclass(frozen=True)
class BenchRow:
    size: int
    n: int
    m: int
    max_degree: int
    repeats: int
    wall_ms: float
    total_path_length: float
    recursion_depth: int

    def format(self) -> str:
        return (
            f"{self.m:>10} {self.n:>10} {self.max_degree:>6} {self.wall_ms:>12.1f} "
            f"{self.total_path_length:>14.1f} {self.recursion_depth:>6}"
        )


HEADER: ty.Final = f"{'m':>10} {'n':>10} {'delta':>6} {'wall_ms':>12} {'path_length':>14} {'depth':>6}"


def _family(kind: GeneratorKind, size: int, k: int, seed: int) -> Graph:
    n = max(size // k, k + 1)
    match kind:
        case GeneratorKind.KDEGENERATE:
            return kdegenerate(n, k, seed)
        case GeneratorKind.KFOREST:
            return kforest(n, k, seed)
        case _:
            raise PreconditionViolatedError(f"bench supports kdegenerate and kforest, got {kind.value}")


def run_bench(
    kind: GeneratorKind,
    sizes: ty.Sequence[int],
    mode: ColoringMode,
    *,
    repeats: int = 1,
    k: int = 2,
    seed: int = 0,
    palette_policy: PalettePolicy = PalettePolicy.AUTO,
) -> list[BenchRow]:
    """
    One generated graph per size (roughly `size` edges); every repeat colors
    it again, with seed + repeat in randomized mode.
    """
    if repeats < 1:
        raise PreconditionViolatedError(f"repeats must be >= 1, got {repeats}")
    rows: list[BenchRow] = []
    for size in sizes:
        g = _family(kind, size, k, seed)
        hint = mad_upper_bound_from_degeneracy(degeneracy_ordering(g).degeneracy)
        times: list[float] = []
        paths: list[int] = []
        depth = 0
        for r in range(repeats):
            if mode is ColoringMode.RANDOMIZED:
                cfg = RunConfig.randomized(seed + r, palette_policy=palette_policy)
            else:
                cfg = RunConfig.deterministic(palette_policy=palette_policy)
            _, report = colorer.color(g, cfg, mad_hint=hint)
            times.append(report.wall_ms)
            paths.append(report.total_path_length)
            depth = max(depth, report.recursion_depth)
        row = BenchRow(
            size=size,
            n=g.vertex_count,
            m=g.edge_count,
            max_degree=g.max_degree,
            repeats=repeats,
            wall_ms=float(np.mean(times)),
            total_path_length=float(np.mean(paths)),
            recursion_depth=depth,
        )
        logger.debug("bench row: %s", row)
        rows.append(row)
    return rows


def growth_exponent(rows: ty.Sequence[BenchRow]) -> float | None:
    "slope of the least-squares line through (log m, log wall_ms); None below two sizes"
    points = [(r.m, r.wall_ms) for r in rows if r.m > 0 and r.wall_ms > 0]
    if len({m for m, _ in points}) < 2:
        return None
    x = np.log([m for m, _ in points])
    y = np.log([t for _, t in points])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def doubling_sizes(low: int, high: int) -> list[int]:
    sizes, size = [], low
    while size <= high:
        sizes.append(size)
        size *= 2
    return sizes
