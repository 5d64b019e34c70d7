import logging
from dataclasses import dataclass, field

import pytest

from madcolor import colorer as _colorer
from madcolor._types import EdgeId, RunConfig, Vertex
from madcolor.coloring import PartialColoring, new_state
from madcolor.graph import build_graph


@pytest.fixture(scope="session")
def logger():
    _logger = logging.getLogger("madcolor-test")
    _logger.setLevel(logging.DEBUG)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.DEBUG)
    console_format = logging.Formatter(
        "%(name)s | %(levelname)s | %(asctime)s | %(message)s"
    )
    console_handler.setFormatter(console_format)

    _logger.addHandler(console_handler)

    return _logger


@pytest.fixture(scope="function")
def colorer():
    _colorer.config(RunConfig())
    yield _colorer
    _colorer.config(RunConfig())


@dataclass
class HandBuilt:
    "a partial coloring plus the names the test refers to"

    state: PartialColoring
    x: Vertex
    edges: dict[str, EdgeId] = field(default_factory=dict)
    vertices: dict[str, Vertex] = field(default_factory=dict)


class _Builder:
    def __init__(self, n: int):
        self.n = n
        self.pairs: list[tuple[Vertex, Vertex]] = []
        self.colors: list[int] = []

    def edge(self, u: Vertex, v: Vertex, color: int = 0) -> EdgeId:
        self.pairs.append((u, v))
        self.colors.append(color)
        return len(self.pairs) - 1

    def leaves(self, v: Vertex, colors: list[int]) -> None:
        for c in colors:
            leaf = self.n
            self.n += 1
            self.edge(v, leaf, c)

    def build(self, D: int) -> PartialColoring:
        s = new_state(build_graph(self.n, self.pairs), D)
        for e, c in enumerate(self.colors):
            if c:
                s.assign(e, c)
        return s


@pytest.fixture
def five_spokes() -> HandBuilt:
    """
    D = 8, x = 0 with spokes y1..y5 = 1..5. The x-edges colored 1, 5 and 7
    lead to vertices 6, 7, 8; 6 and 7 have degree 9 > D so the fan skips
    them without counting them as D-neighbors of x.

    free sets: x {8}, y1 {1,2}, y2 {3,4}, y3 {5}, y4 {6,7}, y5 {8}
    """
    b = _Builder(9)
    names = {
        "xy1": b.edge(0, 1),
        "xy2": b.edge(0, 2, 2),
        "xy3": b.edge(0, 3, 3),
        "xy4": b.edge(0, 4, 4),
        "xy5": b.edge(0, 5, 6),
        "xz1": b.edge(0, 6, 1),
        "xz5": b.edge(0, 7, 5),
        "xz7": b.edge(0, 8, 7),
    }
    b.leaves(1, [3, 4, 5, 6, 7, 8])
    b.leaves(2, [1, 5, 6, 7, 8])
    b.leaves(3, [1, 2, 4, 6, 7, 8])
    b.leaves(4, [1, 2, 3, 5, 8])
    b.leaves(5, [1, 2, 3, 4, 5, 7])
    b.leaves(6, [0] * 8)
    b.leaves(7, [0] * 8)
    return HandBuilt(b.build(8), 0, names, {"y1": 1, "y2": 2, "y3": 3, "y4": 4, "y5": 5})


def _two_spoke_state(path_reaches_y1: bool) -> HandBuilt:
    """
    D = 7, x = 0 free {4, 7}; y1 = 1 free {1, 3}; y2 = 2 behind x's color-1
    edge, free {3}: y1 and y2 share 3. x's color-3 edge goes to w3 = 3.
    With `path_reaches_y1` the (3,4)-path from x continues w3 -4- y1.
    """
    b = _Builder(4)
    names = {
        "xy1": b.edge(0, 1),
        "xy2": b.edge(0, 2, 1),
        "xw3": b.edge(0, 3, 3),
    }
    b.leaves(0, [2, 5, 6])
    if path_reaches_y1:
        names["w3y1"] = b.edge(3, 1, 4)
        b.leaves(1, [2, 5, 6, 7])
    else:
        b.leaves(1, [2, 4, 5, 6, 7])
    b.leaves(2, [2, 4, 5, 6, 7])
    return HandBuilt(b.build(7), 0, names, {"y1": 1, "y2": 2, "w3": 3})


@pytest.fixture
def two_spoke() -> HandBuilt:
    return _two_spoke_state(path_reaches_y1=False)


@pytest.fixture
def two_spoke_path_to_y1() -> HandBuilt:
    return _two_spoke_state(path_reaches_y1=True)


@pytest.fixture
def shared_path() -> HandBuilt:
    """
    D = 3, two weak edges x1-y1 and x2-v1 of type {2,3} whose maximal
    (2,3)-paths are one path x1 -2- p -3- q -2- x2 walked from both ends.

    x1 = 0, y1 = 1, y2 = 2, p = 3, q = 4, x2 = 5, v1 = 6, v2 = 7
    """
    b = _Builder(8)
    names = {
        "x1y1": b.edge(0, 1),
        "x1p": b.edge(0, 3, 2),
        "x1y2": b.edge(0, 2, 1),
        "y1y2": b.edge(1, 2, 3),
        "pq": b.edge(3, 4, 3),
        "qx2": b.edge(4, 5, 2),
        "x2v1": b.edge(5, 6),
        "x2v2": b.edge(5, 7, 1),
        "v1v2": b.edge(6, 7, 3),
    }
    return HandBuilt(b.build(3), 0, names, {"x1": 0, "x2": 5, "p": 3, "q": 4})
