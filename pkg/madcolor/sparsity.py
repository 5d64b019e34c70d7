from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
from networkx.algorithms.flow import boykov_kolmogorov

from madcolor._logs import logger
from madcolor._types import Density, Vertex
from madcolor.errors import InvariantBreachError, PreconditionViolatedError
from madcolor.graph import Graph


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[Vertex, ...]
    degeneracy: int

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def back_degrees(self, g: Graph) -> list[int]:
        "number of neighbors placed earlier in the order, per vertex"
        pos = self.positions()
        return [
            sum(1 for w in g.neighbors(v) if pos[w] < pos[v])
            for v in range(g.vertex_count)
        ]

    def is_valid(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.vertex_count)):
            return False
        return all(b <= self.degeneracy for b in self.back_degrees(g))


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """
    Smallest-last ordering by bucket peeling, linear in n + m.

    Vertices are removed in order of current minimum degree; the removal
    sequence reversed is returned, so each vertex has at most `degeneracy`
    neighbors before it.
    """
    n = g.vertex_count
    if n == 0:
        return DegeneracyOrdering((), 0)
    deg = g.degrees()
    top = max(deg)

    bins = [0] * (top + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(top + 1):
        count, bins[d] = bins[d], start
        start += count

    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(top, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    degeneracy = 0
    for i in range(n):
        v = vert[i]
        degeneracy = max(degeneracy, deg[v])
        for u in g.neighbors(v):
            if deg[u] > deg[v]:
                du, pu = deg[u], pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bins[du] += 1
                deg[u] -= 1

    return DegeneracyOrdering(tuple(reversed(vert)), degeneracy)


def _closure_network(g: Graph) -> nx.DiGraph:
    """
    Density-test gadget: source -> edge node, edge node -> both endpoints
    uncapacitated, vertex -> sink. For a guess p/q the source arcs carry q
    and the sink arcs p, and max_S (q|E(S)| - p|S|) = q*m - min cut.
    """
    n, m = g.vertex_count, g.edge_count
    source, sink = n + m, n + m + 1
    net = nx.DiGraph()
    net.add_nodes_from(range(n + m + 2))
    for e, u, v in g.edges():
        node = n + e
        net.add_edge(source, node, capacity=1)
        net.add_edge(node, u)
        net.add_edge(node, v)
    for v in range(n):
        if g.degree(v):
            net.add_edge(v, sink, capacity=1)
    return net


def _denser_subset(g: Graph, net: nx.DiGraph, ratio: Fraction) -> set[Vertex] | None:
    "a vertex set of density strictly above `ratio`, or None when there is none"
    n, m = g.vertex_count, g.edge_count
    p, q = ratio.numerator, ratio.denominator
    source, sink = n + m, n + m + 1
    for arc in net.succ[source].values():
        arc["capacity"] = q
    for v in range(n):
        if g.degree(v):
            net.succ[v][sink]["capacity"] = p
    cut, (reachable, _) = nx.minimum_cut(net, source, sink, flow_func=boykov_kolmogorov)
    if q * m - cut <= 0:
        return None
    # vertices that cannot reach the sink (isolated ones too) sit on the source side
    picked: set[Vertex] = set()
    for node in reachable:
        if n <= node < n + m:
            picked.update(g.edge(node - n))
    return picked


def _peeling_start(g: Graph) -> tuple[set[Vertex], Density]:
    "densest prefix of the degeneracy order, at least half the maximum density"
    order = degeneracy_ordering(g).order
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    best, best_size, inner = Fraction(0), 0, 0
    for i, v in enumerate(order):
        inner += sum(1 for w in g.neighbors(v) if pos[w] < i)
        density = Fraction(inner, i + 1)
        if density > best:
            best, best_size = density, i + 1
    return set(order[:best_size]), best


def max_density(g: Graph) -> Density:
    return densest_subset(g)[1]


def densest_subset(g: Graph) -> tuple[frozenset[Vertex], Density]:
    """
    Exact maximum density by witness jumps.

    Start from the densest peeling prefix; while a min cut at the current
    density finds a strictly denser set, jump to that set's exact density.
    The sequence of densities strictly increases over a finite set of
    fractions, and in practice stops after a few cuts.
    """
    if g.edge_count == 0:
        raise PreconditionViolatedError("density is undefined for an edgeless graph")
    witness, density = _peeling_start(g)
    net = _closure_network(g)
    cuts = 1
    while (better := _denser_subset(g, net, density)) is not None:
        improved = Fraction(_inner_edges(g, better), len(better))
        if improved <= density:
            raise InvariantBreachError(f"min cut returned density {improved} <= {density}")
        witness, density = better, improved
        cuts += 1
    logger.debug(
        "max density %s after %d cuts (n=%d, m=%d)", density, cuts, g.vertex_count, g.edge_count
    )
    return frozenset(witness), density


def _inner_edges(g: Graph, vertices: set[Vertex] | frozenset[Vertex]) -> int:
    return sum(1 for _, u, v in g.edges() if u in vertices and v in vertices)


def mad(g: Graph) -> Density:
    return 2 * max_density(g)


def average_degree(g: Graph) -> Density:
    if g.vertex_count == 0:
        raise PreconditionViolatedError("average degree is undefined for an empty graph")
    return Fraction(2 * g.edge_count, g.vertex_count)
