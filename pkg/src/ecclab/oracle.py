"""Exact brute-force computations: all-pairs distances, eccentricities under
all five distance semantics, and the median.

Everything here is the trusted reference the rest of the package is tested
against, so it stays simple: n single-source runs, then double loops.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import FORWARD, INF, Graph, shortest_paths

UNDIRECTED = "undirected"
SOURCE = "source"
MAX = "max"
MIN = "min"
ROUNDTRIP = "roundtrip"

VARIANTS = (UNDIRECTED, SOURCE, MAX, MIN, ROUNDTRIP)

DEFAULT_CAP = 5000


class CapacityError(RuntimeError):
    """Raised when an exact computation would exceed the configured cap."""


class VariantError(ValueError):
    """Raised for an unknown variant or a variant/graph mismatch."""


def pair_distance(variant, d_uv, d_vu):
    """Combine the two one-way distances into the variant's pair distance."""
    if variant == SOURCE:
        return d_uv
    if variant == MAX:
        return max(d_uv, d_vu)
    if variant == MIN:
        return min(d_uv, d_vu)
    if variant == ROUNDTRIP:
        return d_uv + d_vu
    if variant == UNDIRECTED:
        return d_uv
    raise VariantError(f"unknown variant {variant!r}")


def check_variant(g, variant):
    if variant not in VARIANTS:
        raise VariantError(f"unknown variant {variant!r}")
    if variant == UNDIRECTED and not g.undirected:
        raise VariantError("variant 'undirected' requires an undirected graph")


def all_pairs(g, cap=DEFAULT_CAP):
    """Forward distance matrix: row u holds d(u -> v) for every v."""
    if cap is not None and g.n > cap:
        raise CapacityError(f"all_pairs capacity cap {cap} exceeded (n={g.n})")
    return [shortest_paths(g, u, FORWARD) for u in range(g.n)]


@dataclass
class EccentricityReport:
    variant: str
    ecc: list
    radius: "int | float"
    diameter: "int | float"
    center: int
    witness: "tuple[int, int] | None"

    def to_json(self):
        def enc(x):
            return "inf" if x == INF else x

        payload = {
            "variant": self.variant,
            "radius": enc(self.radius),
            "diameter": enc(self.diameter),
            "center": self.center,
            "witness": list(self.witness) if self.witness is not None else None,
            "ecc": [enc(e) for e in self.ecc],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_tsv(self):
        lines = ["vertex\tecc"]
        for v, e in enumerate(self.ecc):
            lines.append(f"{v}\t{'inf' if e == INF else e}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_json(text):
        def dec(x):
            return INF if x == "inf" else x

        payload = json.loads(text)
        return EccentricityReport(
            variant=payload["variant"],
            ecc=[dec(e) for e in payload["ecc"]],
            radius=dec(payload["radius"]),
            diameter=dec(payload["diameter"]),
            center=payload["center"],
            witness=tuple(payload["witness"]) if payload["witness"] else None,
        )


def report_from_ecc(variant, ecc, witness=None):
    """Radius/diameter/center bookkeeping shared by the oracle and the
    treewidth solver.  Ties break toward the smallest vertex id."""
    if not ecc:
        raise ValueError("empty graph has no eccentricities")
    radius = min(ecc)
    diameter = max(ecc)
    center = ecc.index(radius)
    return EccentricityReport(variant, list(ecc), radius, diameter, center, witness)


def exact_eccentricities(g, variant, cap=DEFAULT_CAP):
    """Eccentricities of every vertex under the chosen variant, exactly.

    ecc[c] is the maximum over v != c of the variant's pair distance from c;
    a single isolated vertex has eccentricity 0.
    """
    check_variant(g, variant)
    mat = all_pairs(g, cap)
    n = g.n
    ecc = [0] * n
    witness = None
    for u in range(n):
        row = mat[u]
        e = 0
        for v in range(n):
            if v == u:
                continue
            d = pair_distance(variant, row[v], mat[v][u])
            if d > e:
                e = d
        ecc[u] = e
    diameter = max(ecc) if ecc else 0
    # Lexicographically smallest pair attaining the diameter.
    for u in range(n):
        if witness is not None:
            break
        row = mat[u]
        for v in range(n):
            if v == u:
                continue
            if pair_distance(variant, row[v], mat[v][u]) == diameter:
                witness = (u, v)
                break
    return report_from_ecc(variant, ecc, witness)


def exact_median(g, cap=DEFAULT_CAP):
    """The vertex minimizing the sum of forward distances to all others.

    Returns (vertex, total).  The total is INF when no vertex reaches all
    others; ties break toward the smallest vertex id.
    """
    mat = all_pairs(g, cap)
    best_v, best_sum = 0, INF
    for u in range(g.n):
        total = 0
        for v in range(g.n):
            if v != u:
                total += mat[u][v]
        if total < best_sum:
            best_v, best_sum = u, total
    if g.n == 1:
        return 0, 0
    return best_v, best_sum
