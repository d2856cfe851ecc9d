"""Static d-dimensional orthogonal range maximum queries, plus the
three-layered farthest-vertex computation built on top of them.

The index is a classic layered range tree: a balanced hierarchy over the
points sorted by the current coordinate, where every canonical node owns an
index over the remaining coordinates (or just the running maximum at the last
level).  Queries decompose a box side into O(log n) canonical nodes.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .graph import INF


class _Node:
    __slots__ = ("lo", "hi", "left", "right", "sub", "best")

    def __init__(self):
        self.lo = 0
        self.hi = 0
        self.left = None
        self.right = None
        self.sub = None
        self.best = None


def _better(a, b):
    """Maximum value; ties prefer the smaller payload."""
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a if a[1] <= b[1] else b


class RangeMaxIndex:
    """Points are (coords, value, payload); query returns the (value, payload)
    with the maximum value inside a closed box, or None."""

    def __init__(self, dims, points):
        self.dims = dims
        self.points = list(points)
        for coords, _, _ in self.points:
            if len(coords) != dims:
                raise ValueError("point dimension mismatch")
        if dims == 0:
            self._global = None
            for _, value, payload in self.points:
                self._global = _better(self._global, (value, payload))
            self.root = None
            self.coords = None
        else:
            pts = sorted(self.points, key=lambda p: p[0][0])
            self.coords = [p[0][0] for p in pts]
            self.root = self._build(pts, 0, len(pts)) if pts else None

    def _build(self, pts, lo, hi):
        node = _Node()
        node.lo, node.hi = lo, hi
        slice_ = pts[lo:hi]
        if self.dims == 1:
            best = None
            for _, value, payload in slice_:
                best = _better(best, (value, payload))
            node.best = best
        else:
            node.sub = RangeMaxIndex(self.dims - 1, [(c[1:], v, p) for c, v, p in slice_])
        if hi - lo > 1:
            mid = (lo + hi) // 2
            node.left = self._build(pts, lo, mid)
            node.right = self._build(pts, mid, hi)
        return node

    def query(self, box):
        """box is a list of (lo, hi) closed bounds, one per dimension."""
        if len(box) != self.dims:
            raise ValueError("box dimension mismatch")
        if self.dims == 0:
            return self._global
        if self.root is None:
            return None
        lo, hi = box[0]
        a = bisect.bisect_left(self.coords, lo)
        b = bisect.bisect_right(self.coords, hi)
        if a >= b:
            return None
        return self._query(self.root, a, b, box)

    def _query(self, node, a, b, box):
        if node is None or a >= node.hi or b <= node.lo:
            return None
        if a <= node.lo and node.hi <= b:
            if self.dims == 1:
                return node.best
            return node.sub.query(box[1:])
        if node.left is None:
            # Leaf not fully covered can only happen at size-1 nodes.
            return None
        return _better(
            self._query(node.left, a, b, box),
            self._query(node.right, a, b, box),
        )


def range_max_build(points, dims=None):
    """Build an index from (coords, value, payload) triples."""
    pts = list(points)
    if dims is None:
        dims = len(pts[0][0]) if pts else 0
    return RangeMaxIndex(dims, pts)


@dataclass
class ThreeLayerInstance:
    """Distance grids of a layered graph A -> B -> C.

    d_ab[a][b] and d_bc[b][c] are nonnegative ints or INF.  The target is,
    for every a, max over c of min over b of d_ab[a][b] + d_bc[b][c].
    """

    d_ab: list
    d_bc: list

    @property
    def na(self):
        return len(self.d_ab)

    @property
    def nb(self):
        return len(self.d_bc)

    @property
    def nc(self):
        return len(self.d_bc[0]) if self.d_bc else 0


def three_layer_brute(inst):
    """Reference triple loop; returns [(value, witness_c)] per a."""
    nb, nc = inst.nb, inst.nc
    out = []
    for row in inst.d_ab:
        best_val, best_c = -1, None
        for c in range(nc):
            m = INF
            for b in range(nb):
                d = row[b] + inst.d_bc[b][c]
                if d < m:
                    m = d
            if m > best_val:
                best_val, best_c = m, c
        out.append((best_val, best_c))
    return out


def _clamp_diff(x, y, big):
    if x == INF and y == INF:
        return 0
    if x == INF:
        return big
    if y == INF:
        return -big
    return x - y


# Above this many middle-layer vertices the range-tree dimension is too high
# to be worthwhile; fall back to the (equally exact) triple loop.
INDEX_MIDDLE_LIMIT = 6


def three_layer_farthest(inst, use_index=None):
    """For every a, the farthest c through the middle layer, with witness.

    Exact, including infinite entries.  Finite routes are answered by one
    range-max query per middle vertex over coordinate-shifted points;
    infinite answers are detected with subset masks over the middle layer.
    """
    nb, nc = inst.nb, inst.nc
    if nc == 0:
        raise ValueError("empty C layer")
    if nb == 0:
        return [(INF, 0)] * inst.na
    if use_index is None:
        use_index = nb <= INDEX_MIDDLE_LIMIT
    if not use_index:
        return three_layer_brute(inst)

    finite = [x for row in inst.d_ab for x in row if x != INF]
    finite += [x for row in inst.d_bc for x in row if x != INF]
    big = (max(finite) + 1) if finite else 1

    # Masks of middle vertices with finite entries, for the infinite cases.
    full = (1 << nb) - 1
    gmask = [0] * nc
    for b in range(nb):
        row = inst.d_bc[b]
        for c in range(nc):
            if row[c] != INF:
                gmask[c] |= 1 << b
    # rep[m] = some c whose finite-mask is a subset of m.
    rep = [None] * (1 << nb)
    for c in range(nc - 1, -1, -1):
        rep[gmask[c]] = c
    for bit in range(nb):
        step = 1 << bit
        for m in range(1 << nb):
            if m & step and rep[m] is None:
                rep[m] = rep[m ^ step]

    # Per middle vertex: points for every c with a finite d_bc[b][c].
    indexes = []
    for b in range(nb):
        row = inst.d_bc[b]
        pts = []
        for c in range(nc):
            if row[c] == INF:
                continue
            coords = tuple(
                _clamp_diff(inst.d_bc[b2][c], row[c], big)
                for b2 in range(nb)
                if b2 != b
            )
            pts.append((coords, row[c], c))
        indexes.append(RangeMaxIndex(nb - 1, pts))

    out = []
    for row in inst.d_ab:
        fmask = 0
        for b in range(nb):
            if row[b] != INF:
                fmask |= 1 << b
        blocked = rep[full ^ fmask]
        if blocked is not None:
            out.append((INF, blocked))
            continue
        best = None
        for b in range(nb):
            if row[b] == INF:
                continue
            box = [
                (_clamp_diff(row[b], row[b2], big), INF)
                for b2 in range(nb)
                if b2 != b
            ]
            hit = indexes[b].query(box)
            if hit is not None:
                cand = (row[b] + hit[0], hit[1])
                if best is None or cand[0] > best[0] or (
                    cand[0] == best[0] and cand[1] < best[1]
                ):
                    best = cand
        out.append(best if best is not None else (INF, 0))
    return out
