import typing as ty
from dataclasses import dataclass

from madcolor._types import EdgeId, Vertex
from madcolor.errors import GraphError

Neighbor = tuple[Vertex, EdgeId]


@dataclass(frozen=True)
class EdgeSubset:
    members: frozenset[EdgeId]

    @classmethod
    def of(cls, ids: ty.Iterable[EdgeId]) -> "EdgeSubset":
        return cls(frozenset(ids))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, e: object) -> bool:
        return e in self.members

    def __iter__(self) -> ty.Iterator[EdgeId]:
        return iter(sorted(self.members))


class Graph:
    """
    Immutable simple graph on vertices 0..n-1.

    Edge ids are 0..m-1 in construction order and adjacency lists keep
    construction order; every deterministic tie-break downstream relies on it.
    """

    __slots__ = ("_n", "_endpoints", "_adjacency", "_max_degree")

    def __init__(
        self,
        vertex_count: int,
        endpoints: tuple[tuple[Vertex, Vertex], ...],
        adjacency: tuple[tuple[Neighbor, ...], ...],
    ):
        self._n = vertex_count
        self._endpoints = endpoints
        self._adjacency = adjacency
        self._max_degree = max((len(a) for a in adjacency), default=0)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._endpoints)

    @property
    def max_degree(self) -> int:
        return self._max_degree

    @property
    def endpoints(self) -> tuple[tuple[Vertex, Vertex], ...]:
        return self._endpoints

    @property
    def adjacency(self) -> tuple[tuple[Neighbor, ...], ...]:
        return self._adjacency

    def edges(self) -> ty.Iterator[tuple[EdgeId, Vertex, Vertex]]:
        for e, (u, v) in enumerate(self._endpoints):
            yield e, u, v

    def edge(self, e: EdgeId) -> tuple[Vertex, Vertex]:
        return self._endpoints[e]

    def other(self, e: EdgeId, v: Vertex) -> Vertex:
        u, w = self._endpoints[e]
        return w if u == v else u

    def degree(self, v: Vertex) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adjacency]

    def neighbors(self, v: Vertex) -> ty.Iterator[Vertex]:
        return (w for w, _ in self._adjacency[v])

    def closed_neighborhood(self, v: Vertex) -> list[Vertex]:
        return [v, *self.neighbors(v)]

    def all_edges(self) -> EdgeSubset:
        return EdgeSubset(frozenset(range(self.edge_count)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._endpoints == other._endpoints
            and self._adjacency == other._adjacency
        )

    def __hash__(self) -> int:
        return hash((self._n, self._endpoints))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count}, max_degree={self._max_degree})"


def build_graph(n: int, pairs: ty.Iterable[tuple[Vertex, Vertex]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[Vertex, Vertex]] = set()
    endpoints: list[tuple[Vertex, Vertex]] = []
    adjacency: list[list[Neighbor]] = [[] for _ in range(n)]
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) out of range for {n} vertices", pair=(u, v))
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})", pair=(u, v))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate pair ({u}, {v})", pair=(u, v))
        seen.add(key)
        e = len(endpoints)
        endpoints.append((u, v))
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    return Graph(n, tuple(endpoints), tuple(tuple(a) for a in adjacency))


def subgraph_of_edges(g: Graph, keep: EdgeSubset | ty.Iterable[EdgeId]) -> tuple[Graph, list[EdgeId]]:
    """
    Graph on the same vertex set holding exactly `keep`.

    Returns the subgraph and a list mapping new edge id -> original edge id;
    kept edges retain their relative order.
    """
    members = keep.members if isinstance(keep, EdgeSubset) else frozenset(keep)
    m = g.edge_count
    for e in members:
        if not 0 <= e < m:
            raise GraphError(f"unknown edge id {e} for graph with {m} edges")
    id_map = [e for e in range(m) if e in members]
    sub = build_graph(g.vertex_count, (g.edge(e) for e in id_map))
    return sub, id_map


def strip_isolated(g: Graph) -> tuple[Graph, list[Vertex]]:
    """
    Drop degree-0 vertices. Edge ids are unchanged; the returned list maps
    new vertex id -> original vertex id.
    """
    vertex_map = [v for v in range(g.vertex_count) if g.degree(v) > 0]
    if len(vertex_map) == g.vertex_count:
        return g, vertex_map
    new_id = {v: i for i, v in enumerate(vertex_map)}
    sub = build_graph(len(vertex_map), ((new_id[u], new_id[v]) for _, u, v in g.edges()))
    return sub, vertex_map
