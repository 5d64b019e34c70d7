import typing as ty
from dataclasses import dataclass, field
from enum import auto
from fractions import Fraction

from madcolor._types import UNCOLORED, AlgoTypeEnum, Color, Density, EdgeId, Vertex
from madcolor.coloring import PartialColoring
from madcolor.colorer import EdgeColoring
from madcolor.errors import OracleLimitError, PreconditionViolatedError
from madcolor.graph import Graph

MAX_BACKTRACK_EDGES: ty.Final = 40
MAX_BACKTRACK_DEGREE: ty.Final = 8
MAX_ENUM_VERTICES: ty.Final = 15


class ViolationKind(str, AlgoTypeEnum):
    CONFLICT = auto()
    UNCOLORED = auto()
    OUT_OF_PALETTE = auto()


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    edges: tuple[EdgeId, ...]
    vertex: Vertex | None = None
    color: Color | None = None

    def __str__(self) -> str:
        where = f" at vertex {self.vertex}" if self.vertex is not None else ""
        color = f" color {self.color}" if self.color is not None else ""
        return f"{self.kind.value}{where}{color}: edges {list(self.edges)}"


@dataclass(frozen=True)
class ValidationOutcome:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: ViolationKind) -> list[Violation]:
        return [v for v in self.violations if v.kind is kind]


def _raw_colors(
    g: Graph, coloring: PartialColoring | EdgeColoring | ty.Sequence[Color]
) -> list[Color]:
    if isinstance(coloring, PartialColoring):
        return coloring.colors()
    if isinstance(coloring, EdgeColoring):
        return list(coloring.colors)
    return [int(c) for c in coloring]


def validate_coloring(
    g: Graph,
    coloring: PartialColoring | EdgeColoring | ty.Sequence[Color],
    D: int,
) -> ValidationOutcome:
    colors = _raw_colors(g, coloring)
    if len(colors) != g.edge_count:
        raise PreconditionViolatedError(
            f"coloring has {len(colors)} entries for a graph with {g.edge_count} edges"
        )
    violations: list[Violation] = []
    for e, c in enumerate(colors):
        if c == UNCOLORED:
            violations.append(Violation(ViolationKind.UNCOLORED, (e,)))
        elif not 1 <= c <= D:
            violations.append(Violation(ViolationKind.OUT_OF_PALETTE, (e,), color=c))
    for v in range(g.vertex_count):
        by_color: dict[Color, list[EdgeId]] = {}
        for _, e in g.adjacency[v]:
            if colors[e] != UNCOLORED:
                by_color.setdefault(colors[e], []).append(e)
        for c, edges in sorted(by_color.items()):
            if len(edges) > 1:
                violations.append(Violation(ViolationKind.CONFLICT, tuple(edges), v, c))
    return ValidationOutcome(tuple(violations))


def _edge_order(g: Graph) -> list[EdgeId]:
    deg = g.degrees()
    return sorted(range(g.edge_count), key=lambda e: (-max(deg[w] for w in g.edge(e)), e))


def _colorable(g: Graph, k: int) -> bool:
    order = _edge_order(g)
    used = [[False] * (k + 1) for _ in range(g.vertex_count)]
    used_count = [0] * g.vertex_count
    remaining = g.degrees()

    def fits(v: Vertex) -> bool:
        # every uncolored edge at v still needs its own color
        return remaining[v] <= k - used_count[v]

    def place(i: int, highest: int) -> bool:
        if i == len(order):
            return True
        u, v = g.edge(order[i])
        # a color beyond highest + 1 is a relabeling of highest + 1
        for c in range(1, min(k, highest + 1) + 1):
            if used[u][c] or used[v][c]:
                continue
            for w in (u, v):
                used[w][c] = True
                used_count[w] += 1
                remaining[w] -= 1
            if fits(u) and fits(v) and place(i + 1, max(highest, c)):
                return True
            for w in (u, v):
                used[w][c] = False
                used_count[w] -= 1
                remaining[w] += 1
        return False

    return place(0, 0)


def brute_chromatic_index(g: Graph) -> int:
    if g.edge_count > MAX_BACKTRACK_EDGES or g.max_degree > MAX_BACKTRACK_DEGREE:
        raise OracleLimitError(
            f"backtracking is limited to {MAX_BACKTRACK_EDGES} edges and max degree "
            f"{MAX_BACKTRACK_DEGREE}, got {g.edge_count} and {g.max_degree}"
        )
    top = g.max_degree
    if top == 0:
        return 0
    return top if _colorable(g, top) else top + 1


def brute_mad(g: Graph) -> Density:
    """
    max over nonempty S of 2|E(S)|/|S|. Subsets are visited in Gray-code
    order, one vertex toggled per step, so |E(S)| updates by one popcount.
    """
    n = g.vertex_count
    if n > MAX_ENUM_VERTICES:
        raise OracleLimitError(f"subset enumeration is limited to {MAX_ENUM_VERTICES} vertices, got {n}")
    if n == 0:
        raise PreconditionViolatedError("mad is undefined for a graph without vertices")
    nbr_mask = [0] * n
    for _, u, v in g.edges():
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u

    best = Fraction(0)
    subset, inside, size = 0, 0, 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if subset & bit:
            subset ^= bit
            size -= 1
            inside -= (nbr_mask[v] & subset).bit_count()
        else:
            inside += (nbr_mask[v] & subset).bit_count()
            subset |= bit
            size += 1
        if size and Fraction(2 * inside, size) > best:
            best = Fraction(2 * inside, size)
    return best
