from dataclasses import dataclass

from madcolor._types import EdgeId
from madcolor.errors import PreconditionViolatedError
from madcolor.graph import Graph, subgraph_of_edges
from madcolor.sparsity import DegeneracyOrdering, degeneracy_ordering


@dataclass(frozen=True)
class EdgePartition:
    parts: tuple[tuple[EdgeId, ...], ...]
    width: int
    # Δ(G) < c: a single part, P2 cannot hold
    clamped: bool = False
    work: int = 0

    def __len__(self) -> int:
        return len(self.parts)

    def part_graphs(self, g: Graph) -> list[tuple[Graph, list[EdgeId]]]:
        return [subgraph_of_edges(g, p) for p in self.parts]

    def max_degrees(self, g: Graph) -> list[int]:
        "per-part max degree, recomputed from scratch"
        result = []
        for part in self.parts:
            deg = [0] * g.vertex_count
            for e in part:
                u, v = g.edge(e)
                deg[u] += 1
                deg[v] += 1
            result.append(max(deg, default=0))
        return result


def delta_c_partition(
    g: Graph, c: int, ordering: DegeneracyOrdering | None = None
) -> EdgePartition:
    """
    Parts with max degree exactly c except the last, whose max degree lies in
    [c, 2c); the per-part max degrees sum to Δ(G). One sweep over the
    ordering hands each vertex's edges to the first parts up to their room
    c - degree and the rest to the last part.
    """
    if g.edge_count == 0:
        raise PreconditionViolatedError("cannot partition an edgeless graph")
    ordering = ordering or degeneracy_ordering(g)
    if c < ordering.degeneracy:
        raise PreconditionViolatedError(
            f"partition width {c} is below the degeneracy {ordering.degeneracy}"
        )
    top = g.max_degree
    s = top // c
    clamped = s == 0
    s = max(s, 1)
    if s == 1:
        return EdgePartition((tuple(range(g.edge_count)),), c, clamped, g.edge_count)

    pos = ordering.positions()
    parts: list[list[EdgeId]] = [[] for _ in range(s)]
    part_degree = [[0] * s for _ in range(g.vertex_count)]
    work = 0
    for v in ordering.order:
        work += 1
        here = pos[v]
        forward = [(w, e) for w, e in g.adjacency[v] if pos[w] > here]
        taken = 0
        for part in range(s - 1):
            if taken == len(forward):
                break
            work += 1
            room = c - part_degree[v][part]
            for w, e in forward[taken : taken + room]:
                parts[part].append(e)
                part_degree[v][part] += 1
                part_degree[w][part] += 1
                work += 1
            taken = min(len(forward), taken + max(room, 0))
        for w, e in forward[taken:]:
            parts[s - 1].append(e)
            part_degree[v][s - 1] += 1
            part_degree[w][s - 1] += 1
            work += 1
    return EdgePartition(tuple(tuple(p) for p in parts), c, False, work)
