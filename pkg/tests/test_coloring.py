import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from madcolor.coloring import PartialColoring, new_state
from madcolor.errors import ColoringError, PreconditionViolatedError
from madcolor.generators import complete, path, star
from madcolor.graph import build_graph

from .strategies import graphs


def test_empty_state_all_free():
    s = new_state(complete(3), 3)
    for v in range(3):
        assert s.free_colors(v) == [1, 2, 3]
        assert s.free_count(v) == 3


def test_empty_graph_state():
    s = new_state(build_graph(0, []), 1)
    assert s.colored_count() == 0
    assert s.is_proper()


def test_palette_must_be_positive():
    with pytest.raises(PreconditionViolatedError):
        new_state(star(3), 0)


def test_assign_conflict_at_shared_vertex():
    s = new_state(complete(3), 3)
    s.assign(0, 1)
    with pytest.raises(ColoringError) as exc_info:
        s.assign(1, 1)
    assert exc_info.value.color == 1
    assert exc_info.value.vertex == 0


def test_assign_rejects_out_of_palette_and_reassign():
    s = new_state(star(3), 3)
    with pytest.raises(ColoringError):
        s.assign(0, 4)
    s.assign(0, 1)
    with pytest.raises(ColoringError):
        s.assign(0, 2)


def test_assign_unassign_inverse():
    s = new_state(star(3), 3)
    before = s.snapshot()
    s.assign(1, 2)
    assert s.unassign(1) == 2
    assert s.snapshot() == before
    assert s.free_colors(0) == [1, 2, 3]


def test_star_fully_colored():
    s = new_state(star(3), 3)
    for e, c in zip(range(3), (1, 2, 3)):
        s.assign(e, c)
    assert s.free_count(0) == 0
    assert s.is_proper()
    with pytest.raises(ColoringError):
        s.first_free(0)


def _colored_path() -> PartialColoring:
    s = new_state(path(4), 3)
    for e, c in enumerate((1, 2, 1)):
        s.assign(e, c)
    return s


def test_walk_full_path():
    s = _colored_path()
    p = s.walk_alternating(0, 1, 2)
    assert p.edges == (0, 1, 2)
    assert p.end == 3
    assert p.colors == (1, 2)


def test_walk_with_missing_color():
    s = _colored_path()
    p = s.walk_alternating(1, 1, 3)
    assert p.edges == (0,)
    assert p.end == 0


def test_walk_from_vertex_without_colors():
    s = new_state(path(4), 3)
    s.assign(0, 1)
    p = s.walk_alternating(3, 1, 2)
    assert p.empty
    assert p.end == 3


def test_walk_ambiguous():
    s = _colored_path()
    with pytest.raises(ColoringError):
        s.walk_alternating(1, 1, 2)
    with pytest.raises(ColoringError):
        s.walk_alternating(0, 1, 1)


def test_swap_path_relabels():
    s = _colored_path()
    s.swap_path(s.walk_alternating(0, 1, 2))
    assert s.colors() == [2, 1, 2]
    assert s.is_proper()


def test_swap_empty_path_is_noop():
    s = _colored_path()
    before = s.snapshot()
    s.swap_path(s.walk_alternating(0, 3, 2))
    assert s.snapshot() == before


def test_double_swap_restores():
    s = _colored_path()
    before = s.snapshot()
    s.swap_path(s.walk_alternating(0, 1, 2))
    s.swap_path(s.walk_alternating(0, 2, 1))
    assert s.snapshot() == before


def test_swap_stale_path():
    s = _colored_path()
    p = s.walk_alternating(0, 1, 2)
    s.unassign(1)
    s.assign(1, 3)
    with pytest.raises(ColoringError):
        s.swap_path(p)
    assert s.colors() == [1, 3, 1]


def test_swap_rejects_non_maximal_path():
    s = new_state(path(5), 3)
    for e, c in enumerate((1, 2, 1, 2)):
        s.assign(e, c)
    full = s.walk_alternating(0, 1, 2)
    s.unassign(3)
    short = s.walk_alternating(0, 1, 2)
    s.assign(3, 2)
    assert len(full) == 4 and len(short) == 3
    with pytest.raises(ColoringError):
        s.swap_path(short)


@st.composite
def colorings(draw: st.DrawFn):
    "a random proper partial coloring built by first-fit over a random edge order"
    g = draw(graphs(max_vertices=9))
    D = max(g.max_degree, 1) + draw(st.integers(0, 2)) + 1
    s = new_state(g, D)
    order = draw(st.permutations(list(range(g.edge_count))))
    keep = draw(st.lists(st.booleans(), min_size=g.edge_count, max_size=g.edge_count))
    for e, kept in zip(order, keep):
        if not kept:
            continue
        u, v = g.edge(e)
        options = [c for c in range(1, D + 1) if s.is_free(u, c) and s.is_free(v, c)]
        if options:
            s.assign(e, options[draw(st.integers(0, len(options) - 1))])
    return s


@settings(max_examples=80, deadline=None)
@given(colorings())
def test_walk_is_pure(s: PartialColoring):
    g = s.graph
    D = s.palette_size
    for v in range(g.vertex_count):
        for a, b in itertools.combinations(range(1, D + 1), 2):
            if s.is_free(v, a) or s.is_free(v, b):
                assert s.walk_alternating(v, a, b) == s.walk_alternating(v, a, b)


@settings(max_examples=80, deadline=None)
@given(colorings())
def test_same_type_paths_disjoint_or_identical(s: PartialColoring):
    g = s.graph
    D = s.palette_size
    for a, b in itertools.combinations(range(1, D + 1), 2):
        walked = []
        for v in range(g.vertex_count):
            # maximal paths start where exactly one of the two colors is present
            if s.is_free(v, a) != s.is_free(v, b):
                walked.append(frozenset(s.walk_alternating(v, a, b).edges))
        for p, q in itertools.combinations(walked, 2):
            assert not (p & q) or p == q


@settings(max_examples=80, deadline=None)
@given(colorings(), st.data())
def test_swaps_keep_coloring_proper(s: PartialColoring, data: st.DataObject):
    g = s.graph
    D = s.palette_size
    for _ in range(5):
        v = data.draw(st.integers(0, max(g.vertex_count - 1, 0)))
        a, b = data.draw(st.sampled_from(list(itertools.combinations(range(1, D + 1), 2))))
        if g.vertex_count == 0 or not (s.is_free(v, a) or s.is_free(v, b)):
            continue
        s.swap_path(s.walk_alternating(v, a, b))
        assert s.is_proper()
