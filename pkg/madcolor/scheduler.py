"""
Coloring one component with D colors by peeling weak edges.

Each level strips isolated vertices, takes the weak edges E_w of the current
graph H, colors H - E_w first (the next level) and then extends that coloring
over E_w, either edge by edge in random order or by deterministic batches of
non-interacting edges of one path type.
"""

import math
import time
import typing as ty
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from madcolor._logs import logger
from madcolor._types import ColoringMode, EdgeId, Vertex
from madcolor.coloring import PartialColoring, new_state
from madcolor.errors import InvariantBreachError, PreconditionViolatedError
from madcolor.fan import PathType, color_weak_edge, edge_path_type
from madcolor.graph import Graph, strip_isolated, subgraph_of_edges
from madcolor.rng import pick_index
from madcolor.weak import iter_weak, weak_edges

WeakEdge = tuple[EdgeId, Vertex]


@dataclass
class LevelStats:
    level: int
    edge_count: int
    weak_count: int
    path_length: int = 0
    batches: int = 0
    shortfalls: int = 0


@dataclass
class ComponentStats:
    palette_size: int
    edge_count: int
    levels: list[LevelStats] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def recursion_depth(self) -> int:
        return len(self.levels)

    @property
    def total_path_length(self) -> int:
        return sum(lv.path_length for lv in self.levels)

    @property
    def cn_iterations(self) -> int:
        return sum(lv.batches for lv in self.levels)

    @property
    def cn_shortfalls(self) -> int:
        return sum(lv.shortfalls for lv in self.levels)

    @property
    def level_weak_counts(self) -> list[int]:
        return [lv.weak_count for lv in self.levels]


@dataclass(frozen=True)
class BatchOutcome:
    uncolored: int
    path_type: PathType
    candidates: int
    independent: int
    # edges of the path-end conflict graph over S
    conflicts: int
    selected: tuple[EdgeId, ...]
    path_length: int
    bound: int

    @property
    def colored(self) -> int:
        return len(self.selected)

    @property
    def shortfall(self) -> bool:
        return self.colored < self.bound


def progress_bound(uncolored: int, palette_size: int) -> int:
    "ceil(l / (9 D^5))"
    return -(-uncolored // (9 * palette_size**5))


def _majority_type(types: list[PathType]) -> tuple[tuple[int, ...], PathType]:
    counts = Counter(t.key for t in types)
    best = max(counts.values())
    key = min(k for k, v in counts.items() if v == best)
    sample = next(t for t in types if t.key == key)
    return key, sample


def _independent_in_q(g: Graph, cands: list[WeakEdge]) -> list[int]:
    """
    Greedy maximal independent set, in candidate order, of the graph joining
    candidates whose weak endpoints have intersecting closed neighborhoods.
    """
    index: dict[Vertex, list[int]] = {}
    for p, (_, x) in enumerate(cands):
        for v in g.closed_neighborhood(x):
            index.setdefault(v, []).append(p)
    blocked = bytearray(len(cands))
    chosen: list[int] = []
    for p, (_, x) in enumerate(cands):
        if blocked[p]:
            continue
        chosen.append(p)
        for v in g.closed_neighborhood(x):
            for q in index[v]:
                blocked[q] = 1
    return chosen


def cn_batch(
    s: PartialColoring, g: Graph, uncolored_weak: ty.Sequence[WeakEdge]
) -> BatchOutcome:
    """
    Color a batch of weak edges whose extensions do not interact.

    Types are computed without mutation; every edge of the most frequent
    type t is kept (ties: smallest pair, the empty type first; at most D^2
    types exist, so that is at least ceil(l/D^2) edges), then a greedy
    independent set S of the closed-neighborhood conflict graph, and for a nonempty type
    an independent set I of the path-end conflict graph over S. Every edge of
    I is then colored with its precomputed free color at x.
    """
    if not uncolored_weak:
        raise PreconditionViolatedError("batch called without uncolored weak edges")
    D = s.palette_size
    ell = len(uncolored_weak)
    types = [edge_path_type(s, e, x) for e, x in uncolored_weak]
    key, t = _majority_type(types)
    # every edge of type t is kept rather than ceil(l/D^2) of them, so the
    # bound from progress_bound is a floor on |I|, not its expected size
    picked = [i for i, ty_ in enumerate(types) if ty_.key == key]
    cands = [uncolored_weak[i] for i in picked]
    cand_types = [types[i] for i in picked]
    in_s = _independent_in_q(g, cands)

    paths: dict[int, tuple[EdgeId, ...]] = {}
    conflicts = 0
    if t.is_empty:
        chosen = in_s
    else:
        chosen, conflicts = _independent_in_q_prime(s, g, cands, cand_types, in_s, paths)

    used: set[EdgeId] = set()
    for p in chosen:
        edges = paths.get(p, ())
        if used.intersection(edges):
            raise InvariantBreachError("selected alternating paths are not edge-disjoint")
        used.update(edges)

    path_length = 0
    selected: list[EdgeId] = []
    for p in chosen:
        e, x = cands[p]
        expected = cand_types[p]
        now = edge_path_type(s, e, x)
        if now != expected:
            raise InvariantBreachError(
                f"type of edge {e} changed from {expected.key} to {now.key} inside a batch"
            )
        report = color_weak_edge(s, e, x, expected.free_at_x)
        if report.path is not None and report.path.edges != paths.get(p):
            raise InvariantBreachError(f"alternating path of edge {e} changed inside a batch")
        path_length += report.path_length
        selected.append(e)

    outcome = BatchOutcome(
        uncolored=ell,
        path_type=t,
        candidates=len(cands),
        independent=len(in_s),
        conflicts=conflicts,
        selected=tuple(selected),
        path_length=path_length,
        bound=progress_bound(ell, D),
    )
    logger.debug(
        "batch: l=%d type=%s candidates=%d |S|=%d |I|=%d",
        ell, t.key or "empty", len(cands), len(in_s), len(selected),
    )
    return outcome


def _independent_in_q_prime(
    s: PartialColoring,
    g: Graph,
    cands: list[WeakEdge],
    cand_types: list[PathType],
    in_s: list[int],
    paths: dict[int, tuple[EdgeId, ...]],
) -> tuple[list[int], int]:
    owner: dict[Vertex, int] = {}
    for p in in_s:
        for v in g.closed_neighborhood(cands[p][1]):
            owner[v] = p

    walked_by: dict[EdgeId, int] = {}
    adj: dict[int, set[int]] = {p: set() for p in in_s}
    for p in in_s:
        _, x = cands[p]
        c_prime = cand_types[p].free_at_x
        assert c_prime is not None
        c = next(col for col in cand_types[p].colors if col != c_prime)
        path = s.walk_alternating(x, c, c_prime)
        paths[p] = path.edges
        shared = {walked_by[e] for e in path.edges if e in walked_by}
        if shared:
            # only the same maximal path walked from its other end may overlap
            if len(shared) > 1 or set(paths[min(shared)]) != set(path.edges):
                raise InvariantBreachError("alternating paths of one type overlap partially")
        else:
            walked_by.update((e, p) for e in path.edges)
        q = owner.get(path.end)
        if q is not None and q != p:
            adj[p].add(q)
            adj[q].add(p)

    alive = {p: True for p in in_s}
    chosen: list[int] = []
    for p in in_s:
        if alive[p] and len(adj[p]) <= 2:
            chosen.append(p)
            alive[p] = False
            for q in adj[p]:
                alive[q] = False
    return chosen, sum(len(nbrs) for nbrs in adj.values()) // 2


class WeakEdgeScheduler(ABC):
    "extends a coloring of H - E_w over E_w"

    @abstractmethod
    def color_level(self, s: PartialColoring, weak: list[WeakEdge], stats: LevelStats) -> None:
        pass


class RandomizedScheduler(WeakEdgeScheduler):
    """
    Uniformly random uncolored weak edge each step, extended with a color
    drawn uniformly from the free colors at its weak endpoint.
    """

    def __init__(self, rng: np.random.Generator):
        self._rng = rng

    def color_level(self, s: PartialColoring, weak: list[WeakEdge], stats: LevelStats) -> None:
        pending = list(weak)
        rng = self._rng
        while pending:
            i = pick_index(rng, len(pending))
            pending[i], pending[-1] = pending[-1], pending[i]
            e, x = pending.pop()
            free = s.free_colors(x)
            report = color_weak_edge(s, e, x, free[pick_index(rng, len(free))])
            stats.path_length += report.path_length


class DeterministicScheduler(WeakEdgeScheduler):
    def color_level(self, s: PartialColoring, weak: list[WeakEdge], stats: LevelStats) -> None:
        g = s.graph
        pending = list(weak)
        while pending:
            outcome = cn_batch(s, g, pending)
            stats.batches += 1
            stats.path_length += outcome.path_length
            if outcome.colored == 0:
                raise InvariantBreachError("batch made no progress")
            if outcome.shortfall:
                stats.shortfalls += 1
                logger.warning(
                    "batch colored %d of %d edges, below the bound %d",
                    outcome.colored, outcome.uncolored, outcome.bound,
                )
            pending = [(e, x) for e, x in pending if not s.is_colored(e)]


def make_scheduler(mode: ColoringMode, rng: np.random.Generator | None = None) -> WeakEdgeScheduler:
    match mode:
        case ColoringMode.RANDOMIZED:
            if rng is None:
                raise PreconditionViolatedError("randomized scheduling needs a random source")
            return RandomizedScheduler(rng)
        case ColoringMode.DETERMINISTIC:
            return DeterministicScheduler()
        case _:
            raise NotImplementedError


@dataclass
class _Level:
    graph: Graph
    weak: list[WeakEdge]
    # edge id in the next level's graph -> edge id in this level's graph
    inner_ids: list[EdgeId]


def color_component_recursive(
    g: Graph, D: int, scheduler: WeakEdgeScheduler
) -> tuple[PartialColoring, ComponentStats]:
    """
    Proper D-coloring of every edge of `g` (D >= max degree).

    The recursion on H - E_w is unrolled: levels are peeled top-down and
    colored bottom-up, each level copying the coloring of the next one
    through its edge id map.
    """
    if D < g.max_degree:
        raise PreconditionViolatedError(f"palette {D} is below the max degree {g.max_degree}")
    started = time.perf_counter()
    stats = ComponentStats(palette_size=D, edge_count=g.edge_count)
    levels: list[_Level] = []
    h = g
    while h.edge_count:
        h, _ = strip_isolated(h)
        _, verdicts = weak_edges(h, D)
        if not verdicts:
            raise PreconditionViolatedError(
                f"no weak edges at level {len(levels)} ({h.edge_count} edges, D={D}); "
                "the max degree >= 2*mad precondition does not hold"
            )
        weak = list(iter_weak(verdicts))
        stats.levels.append(LevelStats(len(levels), h.edge_count, len(weak)))
        logger.debug("level %d: %d edges, %d weak", len(levels), h.edge_count, len(weak))
        rest, inner_ids = subgraph_of_edges(h, (e for e in range(h.edge_count) if e not in verdicts))
        levels.append(_Level(h, weak, inner_ids))
        h = rest

    inner: PartialColoring | None = None
    for depth in range(len(levels) - 1, -1, -1):
        level = levels[depth]
        s = new_state(level.graph, D)
        if inner is not None:
            for e_inner, e in enumerate(level.inner_ids):
                s.assign(e, inner.color(e_inner))
        scheduler.color_level(s, level.weak, stats.levels[depth])
        inner = s

    result = new_state(g, D)
    if inner is not None:
        # stripping keeps edge ids, so the top level lines up with g
        for e in range(g.edge_count):
            result.assign(e, inner.color(e))
    stats.wall_ms = (time.perf_counter() - started) * 1000
    return result, stats


def recursion_depth_bound(m: int, mad: Fraction) -> int:
    """
    1 + log_{1/r} m with r = 1 - 1/(2 mad^2): each level keeps at most r|E(H)|
    edges. Returned as the smallest integer L with r^(L-1) * m < 1, found
    with exact arithmetic.
    """
    if m <= 1 or mad == 0:
        return 1
    r = 1 - 1 / (2 * mad * mad)
    if r <= 0:
        return 1
    depth, remaining = 1, Fraction(m)
    while remaining >= 1:
        remaining *= r
        depth += 1
    return depth


def path_length_envelope(m: int, max_degree: int) -> float:
    "m * Δ * ln m, the scale the randomized total path length is compared against"
    return m * max_degree * math.log(max(m, 2))
