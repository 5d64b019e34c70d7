import typing as ty

from madcolor._types import Density, PalettePolicy, RunConfig
from madcolor.coloring import PartialColoring
from madcolor.colorer import ColoringReport, EdgeColoring, colorer
from madcolor.errors import ArgumentMissingError
from madcolor.graph import Graph
from madcolor.scheduler import ComponentStats


def color_graph(
    g: Graph,
    cfg: RunConfig | None = None,
    *,
    mad_hint: Density | None = None,
) -> tuple[EdgeColoring, ColoringReport]:
    "Color every edge of `g` with the default colorer"
    return colorer.color(g, cfg, mad_hint=mad_hint)


def color_randomized(
    g: Graph,
    seed: int | None = None,
    *,
    palette_policy: PalettePolicy = PalettePolicy.AUTO,
    workers: int = 1,
    mad_hint: Density | None = None,
) -> tuple[EdgeColoring, ColoringReport]:
    if seed is None:
        raise ArgumentMissingError("seed must be specified for RANDOMIZED mode")
    cfg = RunConfig.randomized(seed, palette_policy=palette_policy, workers=workers)
    return colorer.color(g, cfg, mad_hint=mad_hint)


def color_deterministic(
    g: Graph,
    *,
    palette_policy: PalettePolicy = PalettePolicy.AUTO,
    workers: int = 1,
    mad_hint: Density | None = None,
) -> tuple[EdgeColoring, ColoringReport]:
    cfg = RunConfig.deterministic(palette_policy=palette_policy, workers=workers)
    return colorer.color(g, cfg, mad_hint=mad_hint)


def color_component(
    g: Graph, D: int, cfg: RunConfig | None = None, **kwargs: ty.Any
) -> tuple[PartialColoring, ComponentStats]:
    "One component with exactly D colors, no partition"
    return colorer.color_component(g, D, cfg, **kwargs)
