import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from madcolor.coloring import PartialColoring, new_state
from madcolor.errors import PreconditionViolatedError
from madcolor.fan import (
    EMPTY_TYPE,
    PathType,
    SharedBetweenSpokes,
    SharedWithCenter,
    build_minimal_active_fan,
    color_weak_edge,
    determine_path_type,
    edge_path_type,
    is_active,
    is_fan,
    rotate_fan,
)
from madcolor.generators import complete, kdegenerate, star

from .conftest import HandBuilt
from .strategies import copy_state, first_fit, partial_states


def _spoke_colors(hb: HandBuilt) -> tuple[int, ...]:
    return tuple(hb.state.color(hb.edges[f"xy{i}"]) for i in range(1, 6))


def test_star_fan_from_empty_state():
    s = new_state(star(3), 3)
    fan = build_minimal_active_fan(s, 0, 1)
    assert fan.spokes == (1,)
    assert fan.activation == SharedWithCenter(1, 0)
    assert determine_path_type(s, 0, 1) == EMPTY_TYPE


def test_star_color_from_empty_state():
    s = new_state(star(3), 3)
    report = color_weak_edge(s, 2, 0)
    assert s.color(2) == 1
    assert report.recolored_edges == (2,)
    assert report.path is None


def test_five_spokes_fan(five_spokes: HandBuilt):
    s, x = five_spokes.state, five_spokes.x
    fan = build_minimal_active_fan(s, x, five_spokes.vertices["y1"])
    assert fan.spokes == (1, 2, 3, 4, 5)
    assert fan.activation == SharedWithCenter(8, 4)
    assert is_fan(s, x, fan.spokes)
    assert is_active(s, x, fan.spokes)
    assert not is_active(s, x, fan.spokes[:-1])


def test_five_spokes_rotation(five_spokes: HandBuilt):
    s = five_spokes.state
    fan = build_minimal_active_fan(s, five_spokes.x, five_spokes.vertices["y1"])
    changed = rotate_fan(s, fan, 8)
    assert _spoke_colors(five_spokes) == (2, 4, 3, 6, 8)
    edges = five_spokes.edges
    assert set(changed) == {edges["xy1"], edges["xy2"], edges["xy4"], edges["xy5"]}
    assert s.is_proper()


def test_five_spokes_color_weak_edge(five_spokes: HandBuilt):
    s = five_spokes.state
    edges = five_spokes.edges
    before = s.colored_count()
    report = color_weak_edge(s, edges["xy1"], five_spokes.x)
    assert report.path_type == EMPTY_TYPE
    assert report.path is None
    assert report.fan_size == 5
    assert len(report.recolored_edges) == 4
    assert set(report.recolored_edges) == {edges["xy1"], edges["xy2"], edges["xy4"], edges["xy5"]}
    assert _spoke_colors(five_spokes) == (2, 4, 3, 6, 8)
    assert s.colored_count() == before + 1
    assert s.is_proper()


def test_rotation_of_single_spoke():
    s = new_state(star(3), 3)
    s.assign(0, 1)
    fan = build_minimal_active_fan(s, 0, 2)
    assert fan.spokes == (2,)
    changed = rotate_fan(s, fan, 2)
    assert changed == [1]
    assert s.colors() == [1, 2, 0]


def test_rotation_rejects_color_used_at_center(five_spokes: HandBuilt):
    s = five_spokes.state
    fan = build_minimal_active_fan(s, five_spokes.x, five_spokes.vertices["y1"])
    before = s.snapshot()
    with pytest.raises(PreconditionViolatedError):
        rotate_fan(s, fan, 1)
    assert s.snapshot() == before


def test_two_spoke_activation(two_spoke: HandBuilt):
    s = two_spoke.state
    fan = build_minimal_active_fan(s, two_spoke.x, two_spoke.vertices["y1"])
    assert fan.spokes == (1, 2)
    assert fan.activation == SharedBetweenSpokes(3, 0, 1)
    assert s.free_colors(two_spoke.x) == [4, 7]


def test_two_spoke_path_type(two_spoke: HandBuilt):
    s = two_spoke.state
    t = determine_path_type(s, two_spoke.x, two_spoke.vertices["y1"])
    assert t == PathType((3, 4), 4)
    assert t == determine_path_type(s, two_spoke.x, two_spoke.vertices["y1"])
    assert t == edge_path_type(s, two_spoke.edges["xy1"], two_spoke.x)


def test_two_spoke_color(two_spoke: HandBuilt):
    s = two_spoke.state
    edges = two_spoke.edges
    before = s.colored_count()
    report = color_weak_edge(s, edges["xy1"], two_spoke.x)
    assert report.path is not None
    assert report.path.edges == (edges["xw3"],)
    assert report.rotated_fan_size == 1
    assert s.color(edges["xw3"]) == 4
    assert s.color(edges["xy1"]) == 3
    assert report.recolored_edges == (edges["xw3"], edges["xy1"])
    assert s.colored_count() == before + 1
    assert s.is_proper()


def test_two_spoke_path_ending_at_first_spoke(two_spoke_path_to_y1: HandBuilt):
    hb = two_spoke_path_to_y1
    s, edges = hb.state, hb.edges
    report = color_weak_edge(s, edges["xy1"], hb.x)
    assert report.path is not None
    assert report.path.end == hb.vertices["y1"]
    assert report.rotated_fan_size == 2
    assert s.color(edges["xy1"]) == 1
    assert s.color(edges["xy2"]) == 3
    assert set(report.recolored_edges) == {edges["xw3"], edges["w3y1"], edges["xy2"], edges["xy1"]}
    assert s.is_proper()


def test_forced_free_color(two_spoke: HandBuilt):
    s, edges = two_spoke.state, two_spoke.edges
    report = color_weak_edge(s, edges["xy1"], two_spoke.x, 7)
    assert report.path_type == PathType((3, 7), 7)
    assert s.color(edges["xw3"]) == 7
    assert s.is_proper()


def test_forced_color_must_be_free(two_spoke: HandBuilt):
    with pytest.raises(PreconditionViolatedError):
        color_weak_edge(two_spoke.state, two_spoke.edges["xy1"], two_spoke.x, 1)


def test_colored_edge_rejected(five_spokes: HandBuilt):
    with pytest.raises(PreconditionViolatedError):
        color_weak_edge(five_spokes.state, five_spokes.edges["xy2"], five_spokes.x)


def test_strong_edge_rejected():
    s = new_state(complete(3), 2)
    with pytest.raises(PreconditionViolatedError):
        color_weak_edge(s, 0, 0)


def test_endpoint_must_belong_to_edge():
    s = new_state(star(3), 3)
    with pytest.raises(PreconditionViolatedError):
        color_weak_edge(s, 0, 2)


def _uncolored_at_some_vertex(s: PartialColoring) -> list[tuple[int, int]]:
    return [(e, x) for e in s.uncolored_edges() for x in s.graph.edge(e)]


@settings(max_examples=150, deadline=None)
@given(partial_states(), st.data())
def test_extension_touches_only_center_and_path(s: PartialColoring, data: st.DataObject):
    targets = _uncolored_at_some_vertex(s)
    if not targets:
        return
    e, x = data.draw(st.sampled_from(targets))
    g = s.graph
    before = s.snapshot()
    free_before = [s.free_colors(v) for v in range(g.vertex_count)]
    report = color_weak_edge(s, e, x)

    assert s.is_proper()
    assert s.colored_count() == sum(1 for c in before if c) + 1
    path_edges = set(report.path.edges) if report.path else set()
    at_x = {f for _, f in g.adjacency[x]}
    changed = {f for f in range(g.edge_count) if s.color(f) != before[f]}
    assert changed <= at_x | path_edges
    assert changed == set(report.recolored_edges)

    allowed = set(g.closed_neighborhood(x))
    if report.path:
        allowed.add(report.path.end)
    for v in range(g.vertex_count):
        if s.free_colors(v) != free_before[v]:
            assert v in allowed


@settings(max_examples=150, deadline=None)
@given(partial_states(), st.data())
def test_path_type_ignores_far_edges(s: PartialColoring, data: st.DataObject):
    targets = _uncolored_at_some_vertex(s)
    if not targets:
        return
    e, x = data.draw(st.sampled_from(targets))
    g = s.graph
    near = set(g.closed_neighborhood(x))
    far = [f for f in range(g.edge_count) if not set(g.edge(f)) & near and s.is_colored(f)]
    expected = edge_path_type(s, e, x)
    for f in far:
        s.unassign(f)
    assert edge_path_type(s, e, x) == expected


@settings(max_examples=150, deadline=None)
@given(partial_states())
def test_minimal_fans_are_valid_and_minimal(s: PartialColoring):
    for e, x in _uncolored_at_some_vertex(s):
        fan = build_minimal_active_fan(s, x, s.graph.other(e, x))
        assert is_fan(s, x, fan.spokes)
        assert is_active(s, x, fan.spokes)
        if fan.size > 1:
            assert not is_active(s, x, fan.spokes[:-1])


def reference_rotation(s: PartialColoring, x: int, spokes, spoke_edges, c: int) -> list[int]:
    """
    Plain rotation over a bare color list:
    for i = k..2, if c is free at y_i then swap c with the color of x-y_i;
    finally x-y_1 takes c.
    """
    g = s.graph
    colors = s.colors()

    def free(v: int, color: int) -> bool:
        return all(colors[f] != color for _, f in g.adjacency[v])

    for i in range(len(spokes) - 1, 0, -1):
        if free(spokes[i], c):
            colors[spoke_edges[i]], c = c, colors[spoke_edges[i]]
    colors[spoke_edges[0]] = c
    return colors


def _rotation_cases(seed: int) -> int:
    rng = np.random.default_rng(seed)
    g = kdegenerate(int(rng.integers(6, 18)), int(rng.integers(1, 4)), seed)
    D = g.max_degree + int(rng.integers(1, 3))
    order = [int(e) for e in rng.permutation(g.edge_count)]
    choices = [int(c) for c in rng.integers(-2, D + 1, size=g.edge_count)]
    s = first_fit(g, D, order, choices)
    checked = 0
    for e, x in _uncolored_at_some_vertex(s):
        fan = build_minimal_active_fan(s, x, g.other(e, x))
        last = fan.spokes[-1]
        for c in s.free_colors(x):
            if not s.is_free(last, c):
                continue
            expected = reference_rotation(s, x, fan.spokes, fan.spoke_edges, c)
            trial = copy_state(s)
            rotate_fan(trial, fan, c)
            assert trial.colors() == expected
            assert trial.is_proper()
            checked += 1
    return checked


def test_rotation_matches_reference():
    assert sum(_rotation_cases(seed) for seed in range(40)) > 0


@pytest.mark.integration_test
def test_rotation_matches_reference_sweep(logger):
    checked, seed = 0, 0
    while checked < 10_000:
        checked += _rotation_cases(seed)
        seed += 1
    logger.info("compared %d rotations over %d random states", checked, seed)
