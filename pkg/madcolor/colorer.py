import math
import time
import typing as ty
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from madcolor._logs import logger
from madcolor._types import (
    UNCOLORED,
    Color,
    ColoringMode,
    Density,
    EdgeId,
    PalettePolicy,
    RunConfig,
    format_ratio,
)
from madcolor.coloring import PartialColoring
from madcolor.errors import InsufficientPaletteError, PreconditionViolatedError
from madcolor.graph import Graph, subgraph_of_edges
from madcolor.partition import delta_c_partition
from madcolor.rng import RNG_SCHEME, make_rng
from madcolor.scheduler import (
    ComponentStats,
    WeakEdgeScheduler,
    color_component_recursive,
    make_scheduler,
)
from madcolor.sparsity import mad as exact_mad


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    colors: tuple[Color, ...]
    palette_size: int

    def color(self, e: EdgeId) -> Color:
        return self.colors[e]

    @property
    def colors_used(self) -> int:
        return len({c for c in self.colors if c != UNCOLORED})


@dataclass
class ComponentReport:
    index: int
    edge_count: int
    max_degree: int
    palette_offset: int
    stats: ComponentStats

    @property
    def palette_size(self) -> int:
        return self.stats.palette_size


@dataclass
class ColoringReport:
    mode: ColoringMode
    seed: int | None
    palette_policy: PalettePolicy
    vertex_count: int
    edge_count: int
    max_degree: int
    palette_size: int = 0
    mad: Density | None = None
    # False when `mad` is only an upper bound supplied by the caller
    mad_exact: bool = True
    width: int | None = None
    clamped: bool = False
    fallback: bool = False
    components: list[ComponentReport] = field(default_factory=list)
    colors_used: int = 0
    wall_ms: float = 0.0
    instrumentation: bool = True

    @property
    def recursion_depth(self) -> int:
        return max((c.stats.recursion_depth for c in self.components), default=0)

    @property
    def total_path_length(self) -> int:
        return sum(c.stats.total_path_length for c in self.components)

    @property
    def cn_iterations(self) -> int:
        return sum(c.stats.cn_iterations for c in self.components)

    @property
    def cn_shortfalls(self) -> int:
        return sum(c.stats.cn_shortfalls for c in self.components)

    def to_stats(self) -> dict[str, ty.Any]:
        "flat, json-ready; rationals rendered as 'p/q'"
        stats: dict[str, ty.Any] = {
            "mode": self.mode.value,
            "seed": self.seed,
            "rng": RNG_SCHEME if self.mode is ColoringMode.RANDOMIZED else None,
            "palette_policy": self.palette_policy.value,
            "n": self.vertex_count,
            "m": self.edge_count,
            "max_degree": self.max_degree,
            "palette": self.palette_size,
            "colors_used": self.colors_used,
            "mad": format_ratio(self.mad) if self.mad is not None else None,
            "mad_exact": self.mad_exact,
            "c": self.width,
            "clamped": self.clamped,
            "fallback": self.fallback,
            "components": len(self.components),
            "recursion_depth": self.recursion_depth,
            "recursion_depths": [c.stats.recursion_depth for c in self.components],
            "cn_iterations": self.cn_iterations,
            "cn_shortfalls": self.cn_shortfalls,
            "total_path_length": self.total_path_length,
            "wall_ms": round(self.wall_ms, 3),
        }
        if self.instrumentation:
            stats["component_max_degrees"] = [c.max_degree for c in self.components]
            stats["component_palette_offsets"] = [c.palette_offset for c in self.components]
            stats["level_weak_counts"] = [c.stats.level_weak_counts for c in self.components]
        return stats


@dataclass(frozen=True)
class _Plan:
    "edge groups with their palettes; offsets are cumulative"

    parts: list[tuple[Graph, list[EdgeId], int]]
    mad: Density | None
    mad_exact: bool
    width: int | None
    clamped: bool
    fallback: bool


class EdgeColorer:
    """
    Module-level default instance is `colorer`; sub instances with other
    run configs can be created and configured independently.
    """

    _config: RunConfig

    def config(self, run_config: RunConfig | None = None):
        self._config = run_config or RunConfig()
        return self

    def dispatch(self, cfg: RunConfig, stream: int = 0) -> WeakEdgeScheduler:
        match cfg.mode:
            case ColoringMode.RANDOMIZED:
                assert cfg.seed is not None
                return make_scheduler(cfg.mode, make_rng(cfg.seed, stream))
            case ColoringMode.DETERMINISTIC:
                return make_scheduler(cfg.mode)
            case _:
                raise NotImplementedError

    def color_component(
        self, g: Graph, D: int, cfg: RunConfig | None = None, stream: int = 0
    ) -> tuple[PartialColoring, ComponentStats]:
        return color_component_recursive(g, D, self.dispatch(cfg or self._config, stream))

    def _plan(self, g: Graph, policy: PalettePolicy, mad_hint: Density | None) -> _Plan:
        top = g.max_degree
        whole = [(g, list(range(g.edge_count)), top + 1)]
        if policy is PalettePolicy.DELTA_PLUS_ONE:
            return _Plan(whole, None, True, None, False, False)

        value, exact = (mad_hint, False) if mad_hint is not None else (exact_mad(g), True)
        if top < 2 * value and not exact:
            value, exact = exact_mad(g), True
        if top < 2 * value:
            if policy is PalettePolicy.EXACT_DELTA:
                raise InsufficientPaletteError(top, value)
            logger.warning(
                "max degree %d is below 2*mad = %s, falling back to %d colors",
                top, format_ratio(2 * value), top + 1,
            )
            return _Plan(whole, value, exact, None, False, True)

        width = max(math.ceil(2 * value), 1)
        partition = delta_c_partition(g, width)
        parts: list[tuple[Graph, list[EdgeId], int]] = []
        for sub, id_map in partition.part_graphs(g):
            parts.append((sub, id_map, sub.max_degree))
        return _Plan(parts, value, exact, width, partition.clamped, False)

    def color(
        self,
        g: Graph,
        cfg: RunConfig | None = None,
        *,
        mad_hint: Density | None = None,
    ) -> tuple[EdgeColoring, ColoringReport]:
        """
        Proper edge coloring of `g`.

        With a partition into parts E_1..E_s, part i is colored with
        D_i = Δ(G[E_i]) colors shifted past the palettes of the earlier parts.
        `mad_hint` is an upper bound on mad(g) used in place of the exact
        value when it already certifies max degree >= 2*mad.
        """
        cfg = cfg or self._config
        started = time.perf_counter()
        report = ColoringReport(
            mode=cfg.mode,
            seed=cfg.seed,
            palette_policy=cfg.palette_policy,
            vertex_count=g.vertex_count,
            edge_count=g.edge_count,
            max_degree=g.max_degree,
            instrumentation=cfg.instrumentation,
        )
        if g.edge_count == 0:
            return EdgeColoring(g, (), 0), report
        if mad_hint is not None and mad_hint < 0:
            raise PreconditionViolatedError(f"mad hint must be non-negative, got {mad_hint}")

        plan = self._plan(g, cfg.palette_policy, mad_hint)
        offsets = [0]
        for _, _, D in plan.parts:
            offsets.append(offsets[-1] + D)

        def run(index: int) -> tuple[PartialColoring, ComponentStats]:
            sub, _, D = plan.parts[index]
            return self.color_component(sub, D, cfg, stream=index)

        indices = range(len(plan.parts))
        if cfg.workers > 1 and len(plan.parts) > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
                results = list(executor.map(run, indices))
        else:
            results = [run(i) for i in indices]

        colors = [UNCOLORED] * g.edge_count
        for index, (state, stats) in enumerate(results):
            sub, id_map, D = plan.parts[index]
            offset = offsets[index]
            for e_sub, e in enumerate(id_map):
                colors[e] = offset + state.color(e_sub)
            report.components.append(
                ComponentReport(index, sub.edge_count, sub.max_degree, offset, stats)
            )

        coloring = EdgeColoring(g, tuple(colors), offsets[-1])
        report.palette_size = offsets[-1]
        report.mad = plan.mad
        report.mad_exact = plan.mad_exact
        report.width = plan.width
        report.clamped = plan.clamped
        report.fallback = plan.fallback
        report.colors_used = coloring.colors_used
        report.wall_ms = (time.perf_counter() - started) * 1000
        logger.info(
            "colored n=%d m=%d max_degree=%d mad=%s c=%s parts=%d palette=%d in %.1f ms",
            g.vertex_count, g.edge_count, g.max_degree,
            format_ratio(plan.mad) if plan.mad is not None else "-",
            plan.width, len(plan.parts), offsets[-1], report.wall_ms,
        )
        return coloring, report


def mad_upper_bound_from_degeneracy(degeneracy: int) -> Fraction:
    "mad(G) <= 2 * degeneracy(G): every subgraph has at most k|S| edges"
    return Fraction(2 * degeneracy)


colorer = EdgeColorer().config(RunConfig())
