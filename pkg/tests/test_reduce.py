import random

import pytest

from ecclab.gadgets import gadget_undirected_diameter_23
from ecclab.graph import Graph
from ecclab.oracle import VariantError, exact_eccentricities
from ecclab.reduce23 import (
    DIAMETER,
    RADIUS,
    closed_neighborhoods,
    default_delta,
    hashed_masks,
    reduce_decision23_to_set_system,
)
from ecclab.seeds import substream
from ecclab.setsystem import OV, random_instance


def labeled_gadgets(count, seed, want_answer=None):
    """Oracle-labeled 2-vs-3 undirected gadgets."""
    rng = substream(seed, "labeled")
    out = []
    while len(out) < count:
        inst = random_instance(rng.randint(2, 6), rng.randint(2, 6), rng.randint(2, 5), OV, rng)
        g = gadget_undirected_diameter_23(inst).graph
        report = exact_eccentricities(g, "undirected")
        if report.diameter not in (2, 3):
            continue
        if want_answer is not None and report.diameter != want_answer:
            continue
        out.append((g, report))
    return out


def test_rejects_directed_and_weighted():
    with pytest.raises(VariantError):
        reduce_decision23_to_set_system(Graph(2, [(0, 1)]), DIAMETER, random.Random(0))
    g = Graph(2, [(0, 1, 2)], undirected=True)
    with pytest.raises(VariantError):
        reduce_decision23_to_set_system(g, DIAMETER, random.Random(0))


def test_closed_neighborhoods():
    g = Graph(3, [(0, 1), (1, 2)], undirected=True)
    assert closed_neighborhoods(g) == [
        frozenset({0, 1}),
        frozenset({0, 1, 2}),
        frozenset({1, 2}),
    ]


def test_hashed_masks_cover_members():
    rng = random.Random(1)
    nbhd = [frozenset({0, 5}), frozenset({3})]
    masks = hashed_masks(nbhd, 16, rng)
    assert all(m for m in masks)
    # Intersecting neighborhoods always produce intersecting masks.
    nb2 = [frozenset({0, 1}), frozenset({1, 2})]
    for _ in range(20):
        m = hashed_masks(nb2, 8, rng)
        assert m[0] & m[1]


def test_never_three_on_diameter_two():
    # One-sided error: a diameter-2 graph is never reported as 3.
    for g, report in labeled_gadgets(40, 5, want_answer=2):
        for seed in range(5):
            res = reduce_decision23_to_set_system(g, DIAMETER, substream(seed, "d2"))
            assert res.value == 2


def test_diameter_three_detected_whp():
    hits = total = 0
    for g, report in labeled_gadgets(30, 7, want_answer=3):
        res = reduce_decision23_to_set_system(g, DIAMETER, substream(11, "d3"))
        hits += res.value == 3
        total += 1
    assert hits / total >= 0.99


def test_radius_analog_matches_oracle():
    rng = substream(13, "rad")
    agree = total = 0
    for g, report in labeled_gadgets(40, 13):
        if report.radius not in (2, 3):
            continue
        res = reduce_decision23_to_set_system(g, RADIUS, rng)
        total += 1
        if report.radius == 2:
            # Never report 3 on a radius-2 graph.
            assert res.value == 2
            agree += 1
        else:
            agree += res.value == 3
    assert total > 0 and agree / total >= 0.99


def test_dense_graph_handled_by_traversals():
    # K10 plus a pendant: diameter 2, every hub is high-degree.
    edges = [(u, v) for u in range(10) for v in range(u + 1, 10)] + [(0, 10)]
    g = Graph(11, edges, undirected=True)
    res = reduce_decision23_to_set_system(g, DIAMETER, random.Random(3), delta=2)
    assert res.value == 2
    assert default_delta(g) >= 1


def test_result_bookkeeping():
    g, _ = labeled_gadgets(1, 17)[0]
    res = reduce_decision23_to_set_system(g, DIAMETER, random.Random(0), rounds=7)
    assert res.target == DIAMETER
    assert res.value in (2, 3)
    assert res.hash_width == 10 * res.delta * res.delta
    assert res.rounds_used <= 7
