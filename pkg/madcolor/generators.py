import itertools
import typing as ty
from enum import auto

import networkx as nx

from madcolor._types import AlgoTypeEnum, Vertex
from madcolor.errors import PreconditionViolatedError
from madcolor.graph import Graph, build_graph
from madcolor.rng import make_rng
from madcolor.weak import strong_graph


class GeneratorKind(str, AlgoTypeEnum):
    STAR = auto()
    CYCLE = auto()
    STRONG = auto()
    KFOREST = auto()
    KDEGENERATE = auto()


def star(leaves: int) -> Graph:
    "K_{1,leaves}, center 0"
    if leaves < 0:
        raise PreconditionViolatedError(f"star needs a non-negative leaf count, got {leaves}")
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def path(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionViolatedError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def from_networkx(nxg: nx.Graph) -> Graph:
    "nodes relabeled 0..n-1 in sorted order, edges in networkx iteration order"
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.endpoints)
    return nxg


def disjoint_union(*graphs: Graph) -> Graph:
    "vertex ids of later graphs are shifted past the earlier ones; edge order kept"
    pairs: list[tuple[Vertex, Vertex]] = []
    shift = 0
    for g in graphs:
        pairs.extend((u + shift, v + shift) for _, u, v in g.edges())
        shift += g.vertex_count
    return build_graph(shift, pairs)


def kforest(n: int, k: int, seed: int) -> Graph:
    """
    Union of k random spanning trees on n vertices, duplicates dropped.
    Each tree attaches the i-th vertex of a random permutation to a uniform
    earlier one, so the arboricity is at most k and mad < 2k.
    """
    if k < 1 or n < 1:
        raise PreconditionViolatedError(f"kforest needs n >= 1 and k >= 1, got n={n}, k={k}")
    rng = make_rng(seed)
    seen: set[tuple[Vertex, Vertex]] = set()
    pairs: list[tuple[Vertex, Vertex]] = []
    for _ in range(k):
        order = rng.permutation(n)
        for i in range(1, n):
            u, v = int(order[i]), int(order[int(rng.integers(i))])
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    return build_graph(n, pairs)


def kdegenerate(n: int, k: int, seed: int) -> Graph:
    "random vertex order, each vertex joined to min(i, k) distinct uniform earlier ones"
    if k < 1 or n < 1:
        raise PreconditionViolatedError(f"kdegenerate needs n >= 1 and k >= 1, got n={n}, k={k}")
    rng = make_rng(seed)
    order = rng.permutation(n)
    pairs: list[tuple[Vertex, Vertex]] = []
    for i in range(1, n):
        v = int(order[i])
        for j in rng.choice(i, size=min(i, k), replace=False):
            pairs.append((int(order[int(j)]), v))
    return build_graph(n, pairs)


def generate(kind: GeneratorKind, params: ty.Sequence[int], seed: int = 0) -> Graph:
    """
    star LEAVES | cycle N | strong D | kforest N K | kdegenerate N K
    """

    def need(count: int) -> list[int]:
        if len(params) != count:
            raise PreconditionViolatedError(
                f"{kind.value} takes {count} size parameter(s), got {len(params)}"
            )
        return list(params)

    match kind:
        case GeneratorKind.STAR:
            return star(*need(1))
        case GeneratorKind.CYCLE:
            return cycle(*need(1))
        case GeneratorKind.STRONG:
            return strong_graph(*need(1))
        case GeneratorKind.KFOREST:
            n, k = need(2)
            return kforest(n, k, seed)
        case GeneratorKind.KDEGENERATE:
            n, k = need(2)
            return kdegenerate(n, k, seed)
        case _:
            raise NotImplementedError
