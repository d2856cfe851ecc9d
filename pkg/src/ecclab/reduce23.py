"""Randomized reduction from 2-vs-3 decision problems to set-system instances.

Input graphs are undirected and unweighted, promised to have diameter
(respectively radius) 2 or 3.  Two vertices are at distance >= 3 exactly when
their closed neighborhoods are disjoint, so the decision reduces to disjointness
questions over neighborhoods.  High-degree vertices are handled by exact
traversals; low-degree neighborhoods are hashed into d = 10 * delta**2
coordinates and handed to the bit-parallel set-system solver.

Error behavior is one-sided: a diameter-2 (radius-2) input is never answered 3,
and the 3-side answer can only be missed with probability at most 10**-rounds
per witness (each round preserves a witness pair with probability >= 0.9).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import INF, shortest_paths
from .oracle import VariantError
from .setsystem import OV, SetSystemInstance, solve_set_system

DIAMETER = "diameter"
RADIUS = "radius"
DEFAULT_ROUNDS = 20


@dataclass
class ReductionResult:
    value: int  # 2 or 3
    target: str
    witness: "tuple | int | None"
    rounds_used: int
    delta: int
    hash_width: int
    high_degree: list = field(default_factory=list)
    notes: str = ""


def _check_input(g):
    if not g.undirected:
        raise VariantError("the 2-vs-3 reduction expects an undirected graph")
    if not g.unit_weights:
        raise VariantError("the 2-vs-3 reduction expects unit weights")


def closed_neighborhoods(g):
    return [frozenset(u for u, _ in g.adj_out[v]) | {v} for v in range(g.n)]


def default_delta(g):
    return max(1, math.isqrt(max(g.m, 1)))


def hashed_masks(neighborhoods, width, rng):
    """Hash each vertex id to one of `width` coordinates and return the
    bitmask of hashed closed neighborhoods.  Members may be arbitrary vertex
    ids, not just indices into the list."""
    top = max((max(nb) for nb in neighborhoods if nb), default=-1)
    h = [rng.randrange(width) for _ in range(top + 1)]
    masks = []
    for nb in neighborhoods:
        m = 0
        for w in nb:
            m |= 1 << h[w]
        masks.append(m)
    return masks


def reduce_decision23_to_set_system(g, target, rng, delta=None, rounds=DEFAULT_ROUNDS):
    """Decide diameter (or radius) 2 vs 3 through set-system instances.

    Returns a ReductionResult whose value is 2 or 3.  The caller promises the
    true value is in {2, 3}; violations are not detected."""
    _check_input(g)
    if target not in (DIAMETER, RADIUS):
        raise ValueError("target must be 'diameter' or 'radius'")
    if delta is None:
        delta = default_delta(g)
    width = 10 * delta * delta
    nbhd = closed_neighborhoods(g)
    high = [v for v in range(g.n) if len(g.adj_out[v]) >= delta]
    low = [v for v in range(g.n) if len(g.adj_out[v]) < delta]

    if target == DIAMETER:
        return _reduce_diameter(g, nbhd, high, low, width, rng, rounds, delta)
    return _reduce_radius(g, nbhd, high, low, width, rng, rounds, delta)


def _reduce_diameter(g, nbhd, high, low, width, rng, rounds, delta):
    # Exact traversals cover every pair that touches a high-degree vertex.
    for v in high:
        dist = shortest_paths(g, v)
        far = [u for u in range(g.n) if dist[u] >= 3]
        if far:
            return ReductionResult(3, DIAMETER, (v, far[0]), 0, delta, width, high,
                                   notes="high-degree traversal")
    for rnd in range(rounds):
        masks = hashed_masks([nbhd[v] for v in low], width, rng)
        inst = SetSystemInstance(width, masks, masks, OV)
        found, wit = solve_set_system(inst)
        if found:
            u, v = low[wit[0]], low[wit[1]]
            # Orthogonal hashed masks imply truly disjoint neighborhoods.
            if not (nbhd[u] & nbhd[v]):
                return ReductionResult(3, DIAMETER, (u, v), rnd + 1, delta, width,
                                       high, notes="hashed round")
    return ReductionResult(2, DIAMETER, None, rounds, delta, width, high)


def _reduce_radius(g, nbhd, high, low, width, rng, rounds, delta):
    # A high-degree vertex with eccentricity <= 2 settles the radius directly.
    for v in high:
        dist = shortest_paths(g, v)
        if all(dist[u] <= 2 for u in range(g.n)):
            return ReductionResult(2, RADIUS, v, 0, delta, width, high,
                                   notes="high-degree traversal")
    # Low-degree candidate centers must survive every hashed round: a true
    # radius-2 center always does, a radius-3 pretender survives a round only
    # through hash collisions.
    survivors = list(low)
    rnd = 0
    for rnd in range(rounds):
        if not survivors:
            break
        masks = hashed_masks(nbhd, width, rng)
        survivors = [
            c for c in survivors
            if all(masks[c] & masks[v] for v in range(g.n))
        ]
    if survivors:
        return ReductionResult(2, RADIUS, survivors[0], rnd + 1, delta, width, high,
                               notes="hashed rounds")
    return ReductionResult(3, RADIUS, None, rounds, delta, width, high)
