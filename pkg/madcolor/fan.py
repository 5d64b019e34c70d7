"""
Fans and the single-edge extension step.

A fan (x, y1..yk) has x-y1 uncolored, every later spoke colored with a color
free at some earlier spoke, and every later spoke of degree < D. It is active
when a spoke shares a free color with x or two spokes share a free color.
Coloring a weak edge builds a minimal active fan, optionally swaps one
alternating path, and rotates a fan prefix.
"""

import typing as ty
from collections import deque
from dataclasses import dataclass

from madcolor._types import Color, EdgeId, Vertex
from madcolor.coloring import AlternatingPath, PartialColoring
from madcolor.errors import ColoringError, InvariantBreachError, PreconditionViolatedError
from madcolor.weak import top_degree_count


@dataclass(frozen=True)
class SharedWithCenter:
    "`color` is free at x and at spoke `index`"

    color: Color
    index: int


@dataclass(frozen=True)
class SharedBetweenSpokes:
    "`color` is free at spokes `first` < `second`"

    color: Color
    first: int
    second: int


Activation = SharedWithCenter | SharedBetweenSpokes


@dataclass(frozen=True)
class Fan:
    center: Vertex
    spokes: tuple[Vertex, ...]
    spoke_edges: tuple[EdgeId, ...]
    activation: Activation

    @property
    def size(self) -> int:
        return len(self.spokes)


@dataclass(frozen=True, order=True)
class PathType:
    """
    The unordered color pair of the path a weak edge would swap, or the
    empty type when the fan rotates without one. `free_at_x` is the member
    of the pair that is free at the weak endpoint.
    """

    colors: tuple[Color, ...] = ()
    free_at_x: Color | None = None

    @property
    def is_empty(self) -> bool:
        return not self.colors

    @property
    def key(self) -> tuple[Color, ...]:
        return self.colors

    @classmethod
    def pair(cls, c: Color, c_prime: Color) -> "PathType":
        return cls(tuple(sorted((c, c_prime))), c_prime)


EMPTY_TYPE: ty.Final = PathType()


@dataclass(frozen=True)
class ColorEdgeReport:
    edge: EdgeId
    center: Vertex
    fan_size: int
    rotated_fan_size: int
    path_type: PathType
    path: AlternatingPath | None
    recolored_edges: tuple[EdgeId, ...]

    @property
    def path_length(self) -> int:
        return len(self.path) if self.path else 0


def _edge_between(s: PartialColoring, x: Vertex, y: Vertex) -> EdgeId:
    for w, e in s.graph.adjacency[x]:
        if w == y:
            return e
    raise PreconditionViolatedError(f"{x} and {y} are not adjacent")


def _check_weak(s: PartialColoring, x: Vertex, y1: Vertex) -> None:
    g, D = s.graph, s.palette_size
    d_y = g.degree(y1)
    if top_degree_count(g, x, D) > D - d_y + (d_y == D):
        raise PreconditionViolatedError(f"edge {x}-{y1} is not ({D},{x})-weak")


def _build(s: PartialColoring, x: Vertex, y1: Vertex, e: EdgeId) -> Fan:
    if s.is_colored(e):
        raise PreconditionViolatedError(f"edge {e} ({x}-{y1}) is already colored")
    _check_weak(s, x, y1)
    g, D = s.graph, s.palette_size

    in_union = bytearray(D + 1)
    union_size = 0
    pending: deque[Color] = deque()
    spokes, edges = [y1], [e]
    floor = D - g.degree(y1)

    while True:
        i = len(spokes) - 1
        y = spokes[i]
        # activity-checking loop
        for c in s.free_colors(y):
            if s.is_free(x, c):
                return Fan(x, tuple(spokes), tuple(edges), SharedWithCenter(c, i))
            if in_union[c]:
                first = next(j for j in range(i) if s.is_free(spokes[j], c))
                return Fan(x, tuple(spokes), tuple(edges), SharedBetweenSpokes(c, first, i))
            in_union[c] = 1
            union_size += 1
            pending.append(c)

        if union_size < floor + len(spokes):
            raise InvariantBreachError(
                f"inactive fan at {x} of size {len(spokes)} has only {union_size} free colors"
            )

        # extension loop
        while True:
            if not pending:
                raise PreconditionViolatedError(
                    f"fan at {x} of size {len(spokes)} is inactive and cannot be extended"
                )
            c = pending.popleft()
            f = s.edge_with(x, c)
            z = g.other(f, x)
            if g.degree(z) < D:
                spokes.append(z)
                edges.append(f)
                break


def build_minimal_active_fan(s: PartialColoring, x: Vertex, y1: Vertex) -> Fan:
    return _build(s, x, y1, _edge_between(s, x, y1))


def is_fan(s: PartialColoring, x: Vertex, spokes: ty.Sequence[Vertex]) -> bool:
    g, D = s.graph, s.palette_size
    nbrs = {w: e for w, e in g.adjacency[x]}
    if not spokes or len(set(spokes)) != len(spokes) or any(y not in nbrs for y in spokes):
        return False
    if s.is_colored(nbrs[spokes[0]]):
        return False
    for i in range(1, len(spokes)):
        y = spokes[i]
        c = s.color(nbrs[y])
        if not c or not any(s.is_free(spokes[j], c) for j in range(i)):
            return False
        if g.degree(y) >= D:
            return False
    return True


def is_active(s: PartialColoring, x: Vertex, spokes: ty.Sequence[Vertex]) -> bool:
    free_x = set(s.free_colors(x))
    seen: set[Color] = set()
    for y in spokes:
        free_y = set(s.free_colors(y))
        if free_y & free_x or free_y & seen:
            return True
        seen |= free_y
    return False


def _rotate(
    s: PartialColoring,
    x: Vertex,
    spokes: ty.Sequence[Vertex],
    edges: ty.Sequence[EdgeId],
    c: Color,
) -> list[EdgeId]:
    if not (s.is_free(x, c) and s.is_free(spokes[-1], c)):
        raise PreconditionViolatedError(f"color {c} is not free at both {x} and {spokes[-1]}")
    changed: list[EdgeId] = []
    for i in range(len(spokes) - 1, 0, -1):
        if s.is_free(spokes[i], c):
            old = s.unassign(edges[i])
            s.assign(edges[i], c)
            changed.append(edges[i])
            c = old
    if not s.is_free(spokes[0], c):
        raise InvariantBreachError(f"rotation at {x} reached y1 without a free color")
    s.assign(edges[0], c)
    changed.append(edges[0])
    return changed


def rotate_fan(s: PartialColoring, fan: Fan, c: Color) -> list[EdgeId]:
    "downshift spoke colors so that x-y1 gets colored; returns the edges whose color changed"
    return _rotate(s, fan.center, fan.spokes, fan.spoke_edges, c)


def _path_type(s: PartialColoring, fan: Fan, c_prime: Color | None = None) -> PathType:
    act = fan.activation
    if isinstance(act, SharedWithCenter):
        return EMPTY_TYPE
    return PathType.pair(act.color, c_prime if c_prime is not None else s.first_free(fan.center))


def determine_path_type(s: PartialColoring, x: Vertex, y1: Vertex) -> PathType:
    "type of the path coloring x-y1 would swap; builds the fan only, no mutation"
    return _path_type(s, build_minimal_active_fan(s, x, y1))


def edge_path_type(s: PartialColoring, e: EdgeId, x: Vertex) -> PathType:
    return _path_type(s, _build(s, x, s.graph.other(e, x), e))


def color_weak_edge(
    s: PartialColoring,
    e: EdgeId,
    x: Vertex,
    forced_c_prime: Color | None = None,
) -> ColorEdgeReport:
    """
    Color the uncolored (D,x)-weak edge `e`, recoloring only edges at x and
    the edges of at most one alternating path that starts at x.
    """
    u, v = s.graph.edge(e)
    if x not in (u, v):
        raise PreconditionViolatedError(f"vertex {x} is not an endpoint of edge {e}")
    if forced_c_prime is not None and not s.is_free(x, forced_c_prime):
        raise PreconditionViolatedError(f"forced color {forced_c_prime} is not free at {x}")
    fan = _build(s, x, v if x == u else u, e)
    act = fan.activation

    if isinstance(act, SharedWithCenter):
        changed = rotate_fan(s, fan, act.color)
        return ColorEdgeReport(e, x, fan.size, fan.size, EMPTY_TYPE, None, tuple(changed))

    c = act.color
    c_prime = forced_c_prime if forced_c_prime is not None else s.first_free(x)
    try:
        path = s.walk_alternating(x, c, c_prime)
    except ColoringError as exc:
        raise InvariantBreachError(f"color {c} and {c_prime} both present at {x}") from exc
    s.swap_path(path)
    j = act.second if path.end == fan.spokes[act.first] else act.first
    changed = _rotate(s, x, fan.spokes[: j + 1], fan.spoke_edges[: j + 1], c)
    on_path = set(path.edges)
    recolored = list(path.edges)
    recolored.extend(f for f in changed if f not in on_path)
    return ColorEdgeReport(
        e, x, fan.size, j + 1, PathType.pair(c, c_prime), path, tuple(recolored)
    )
