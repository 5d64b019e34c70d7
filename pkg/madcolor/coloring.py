"partial edge coloring with O(1) color-at-vertex lookups"

import typing as ty
from dataclasses import dataclass

from madcolor._types import UNCOLORED, Color, EdgeId, Vertex
from madcolor.errors import ColoringError, PreconditionViolatedError
from madcolor.graph import Graph

NO_EDGE: ty.Final[EdgeId] = -1


@dataclass(frozen=True)
class AlternatingPath:
    start: Vertex
    colors: tuple[Color, Color]
    edges: tuple[EdgeId, ...]
    end: Vertex

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def empty(self) -> bool:
        return not self.edges

    @property
    def type(self) -> frozenset[Color]:
        return frozenset(self.colors)


class PartialColoring:
    __slots__ = ("_graph", "_palette", "_assignment", "_color_map", "_free_count")

    def __init__(self, graph: Graph, palette_size: int):
        if palette_size < 1:
            raise PreconditionViolatedError(f"palette size must be >= 1, got {palette_size}")
        self._graph = graph
        self._palette = palette_size
        self._assignment = [UNCOLORED] * graph.edge_count
        self._color_map = [[NO_EDGE] * (palette_size + 1) for _ in range(graph.vertex_count)]
        self._free_count = [palette_size] * graph.vertex_count

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def palette_size(self) -> int:
        return self._palette

    def color(self, e: EdgeId) -> Color:
        return self._assignment[e]

    def colors(self) -> list[Color]:
        return list(self._assignment)

    def is_colored(self, e: EdgeId) -> bool:
        return self._assignment[e] != UNCOLORED

    def colored_count(self) -> int:
        return sum(1 for c in self._assignment if c != UNCOLORED)

    def uncolored_edges(self) -> list[EdgeId]:
        return [e for e, c in enumerate(self._assignment) if c == UNCOLORED]

    def edge_with(self, v: Vertex, c: Color) -> EdgeId:
        "edge at v carrying color c, or -1"
        return self._color_map[v][c]

    def is_free(self, v: Vertex, c: Color) -> bool:
        return self._color_map[v][c] == NO_EDGE

    def free_count(self, v: Vertex) -> int:
        return self._free_count[v]

    def free_colors(self, v: Vertex) -> list[Color]:
        row = self._color_map[v]
        return [c for c in range(1, self._palette + 1) if row[c] == NO_EDGE]

    def first_free(self, v: Vertex) -> Color:
        row = self._color_map[v]
        for c in range(1, self._palette + 1):
            if row[c] == NO_EDGE:
                return c
        raise ColoringError(f"no free color at vertex {v}", vertex=v)

    def _check_color(self, c: Color) -> None:
        if not 1 <= c <= self._palette:
            raise ColoringError(f"color {c} outside palette 1..{self._palette}", color=c)

    def assign(self, e: EdgeId, c: Color) -> None:
        self._check_color(c)
        if self._assignment[e] != UNCOLORED:
            raise ColoringError(f"edge {e} already has color {self._assignment[e]}", color=c)
        u, v = self._graph.edge(e)
        for w in (u, v):
            if self._color_map[w][c] != NO_EDGE:
                raise ColoringError(
                    f"color {c} is already used at vertex {w} by edge {self._color_map[w][c]}",
                    vertex=w,
                    color=c,
                )
        self._assignment[e] = c
        self._color_map[u][c] = e
        self._color_map[v][c] = e
        self._free_count[u] -= 1
        self._free_count[v] -= 1

    def unassign(self, e: EdgeId) -> Color:
        c = self._assignment[e]
        if c == UNCOLORED:
            raise ColoringError(f"edge {e} is not colored")
        u, v = self._graph.edge(e)
        self._assignment[e] = UNCOLORED
        self._color_map[u][c] = NO_EDGE
        self._color_map[v][c] = NO_EDGE
        self._free_count[u] += 1
        self._free_count[v] += 1
        return c

    def walk_alternating(self, start: Vertex, a: Color, b: Color) -> AlternatingPath:
        """
        The maximal (a, b)-alternating path leaving `start`, beginning with
        whichever of a, b is present there. Empty when neither is.
        """
        if a == b:
            raise ColoringError(f"alternating path needs two colors, got {a} twice", color=a)
        self._check_color(a)
        self._check_color(b)
        cmap = self._color_map
        has_a = cmap[start][a] != NO_EDGE
        has_b = cmap[start][b] != NO_EDGE
        if has_a and has_b:
            raise ColoringError(
                f"both colors {a} and {b} are present at vertex {start}", vertex=start
            )
        if not (has_a or has_b):
            return AlternatingPath(start, (a, b), (), start)
        first, second = (a, b) if has_a else (b, a)
        edges: list[EdgeId] = []
        v, want, other = start, first, second
        graph = self._graph
        while (e := cmap[v][want]) != NO_EDGE:
            edges.append(e)
            v = graph.other(e, v)
            want, other = other, want
        return AlternatingPath(start, (first, second), tuple(edges), v)

    def swap_path(self, path: AlternatingPath) -> None:
        "exchange the two colors along `path`; rejects a path that no longer matches"
        if path.empty:
            return
        first, second = path.colors
        expected = first
        for e in path.edges:
            if self._assignment[e] != expected:
                raise ColoringError(
                    f"stale path: edge {e} has color {self._assignment[e]}, expected {expected}",
                    color=expected,
                )
            expected = second if expected == first else first
        after_last = second if len(path) % 2 else first
        for w, c in ((path.start, second), (path.end, after_last)):
            if self._color_map[w][c] != NO_EDGE:
                raise ColoringError(f"stale path: no longer maximal at vertex {w}", vertex=w)
        swapped = [(e, second if self.unassign(e) == first else first) for e in path.edges]
        for e, c in swapped:
            self.assign(e, c)

    def is_proper(self) -> bool:
        "full O(m) re-scan of assignment against the color maps"
        seen: set[tuple[Vertex, Color]] = set()
        for e, u, v in self._graph.edges():
            c = self._assignment[e]
            if c == UNCOLORED:
                continue
            if (u, c) in seen or (v, c) in seen:
                return False
            seen.add((u, c))
            seen.add((v, c))
            if self._color_map[u][c] != e or self._color_map[v][c] != e:
                return False
        for v in range(self._graph.vertex_count):
            used = sum(1 for c in range(1, self._palette + 1) if self._color_map[v][c] != NO_EDGE)
            if self._free_count[v] != self._palette - used:
                return False
        return True

    def snapshot(self) -> tuple[Color, ...]:
        return tuple(self._assignment)


def new_state(g: Graph, palette_size: int) -> PartialColoring:
    return PartialColoring(g, palette_size)
