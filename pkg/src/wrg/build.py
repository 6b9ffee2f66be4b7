"""Construction of witness rectangle graphs.

Three builders live here:

* :func:`build_oracle` counts the witnesses in every vertex pair's box, read
  off a prefix-count table over witness ranks (or, for very large witness
  sets, by testing each witness directly). It is the reference semantics for
  all three modes and shares nothing with the sweep.
* :func:`build_sweep` is the output-sensitive builder for the positive and
  negative modes. It works on dominance pairs: a divide-and-conquer pass over
  the x-order finds every pair ``p < q`` (``q`` dominating ``p``) together
  with whether a witness sits between them, and a second pass on the
  x-mirrored scene handles negative-slope pairs.
* :func:`build_rig` is the classical rectangle-of-influence graph.
"""

from __future__ import annotations

import bisect
import itertools
import sys
from array import array
from collections.abc import Mapping
from typing import Iterable, Sequence

import numpy as np

from .errors import WRGError
from .geometry import PlanePoint, Scene
from .graph import Graph

MODES = ("positive", "negative", "mixed")

# elements compared per numpy kernel call; keeps temporaries around 10 MB and reused between blocks
_BLOCK = 1 << 20
# rows per pair block; few rows keep the in-block triangles a small share of the pairs
_ROWS = 64


def _coords(points: Sequence[PlanePoint]) -> tuple[np.ndarray, np.ndarray]:
    x = np.fromiter((p.x for p in points), dtype=np.int64, count=len(points))
    y = np.fromiter((p.y for p in points), dtype=np.int64, count=len(points))
    return x, y


class _Slopes(Mapping):
    """Edge slopes read off the coordinates on demand.

    Dense graphs have hundreds of thousands of edges; a materialized dict
    would cost as much as finding them.
    """

    def __init__(self, edges: frozenset, where: dict[str, tuple[int, int]]):
        self._edges = edges
        self._where = where

    def __getitem__(self, e: tuple[str, str]) -> str:
        if e not in self._edges:
            raise KeyError(e)
        (ux, uy), (vx, vy) = self._where[e[0]], self._where[e[1]]
        return "+" if (ux - vx) * (uy - vy) > 0 else "-"

    def __iter__(self):
        return iter(self._edges)

    def __len__(self):
        return len(self._edges)


def _graph_from_pairs(points: Sequence[PlanePoint], I, J) -> Graph:
    """Edges for index arrays I, J (any order, no duplicates), slopes attached."""
    ids = [p.id for p in points]
    verts = tuple(ids)
    I = np.asarray(I, dtype=np.int64)
    J = np.asarray(J, dtype=np.int64)
    if I.size == 0:
        return Graph._trusted(verts, frozenset(), {})
    id_rank = np.empty(len(ids), dtype=np.int64)
    id_rank[sorted(range(len(ids)), key=ids.__getitem__)] = np.arange(len(ids))
    swap = id_rank[I] > id_rank[J]
    A, B = np.where(swap, J, I), np.where(swap, I, J)
    names = np.array(ids, dtype=object)
    edges = frozenset(zip(names[A].tolist(), names[B].tolist()))
    return Graph._trusted(verts, edges, _Slopes(edges, {p.id: (p.x, p.y) for p in points}))


def _witness_split(scene: Scene, mode: str) -> tuple[tuple, tuple]:
    if mode == "positive":
        if scene.neg_witnesses:
            raise WRGError("positive mode needs a scene without negative witnesses")
        return scene.pos_witnesses, ()
    if mode == "negative":
        return scene.pos_witnesses + scene.neg_witnesses, ()
    if mode == "mixed":
        return scene.pos_witnesses, scene.neg_witnesses
    raise WRGError(f"unknown mode {mode!r}")


def _pair_blocks(n: int):
    """Yield index arrays (I, J) with I < J, broadcast-compatible, covering
    every pair once: per block of rows, the rectangle against all later
    columns, then the pairs inside the block."""
    step = max(1, min(_BLOCK // max(n, 1), _ROWS))
    for start in range(0, n - 1, step):
        stop = min(n, start + step)
        rows = np.arange(start, stop)
        if stop < n:
            yield rows[:, None], np.arange(stop, n)[None, :]
        if stop - start > 1:
            ii, jj = np.triu_indices(stop - start, 1)
            yield ii + start, jj + start


def _count_inside(lox, hix, loy, hiy, wx, wy) -> np.ndarray:
    counts = np.zeros(lox.size, dtype=np.int64)
    step = max(1, _BLOCK // max(lox.size, 1))
    for s in range(0, wx.size, step):
        cx, cy = wx[s : s + step], wy[s : s + step]
        inside = (
            (lox[:, None] < cx) & (cx < hix[:, None]) & (loy[:, None] < cy) & (cy < hiy[:, None])
        )
        counts += inside.sum(axis=1)
    return counts


def build_oracle(scene: Scene, mode: str = "positive") -> Graph:
    """Reference builder: the witness count of every vertex pair's box, O(n^2 + |W|^2)."""
    pos, neg = _witness_split(scene, mode)
    return _oracle(scene.points, pos, neg, mode)


def build_self_witnessed(points: Sequence[PlanePoint], mode: str = "positive") -> Graph:
    """The graph on ``points`` with the same points acting as witnesses.

    Such a witness shares coordinates with a vertex, which a :class:`Scene`
    forbids; it is harmless here because a box corner is never strictly
    inside the box.
    """
    if mode not in ("positive", "negative"):
        raise WRGError(f"unsupported mode {mode!r}")
    points = Scene(tuple(points)).points
    return _oracle(points, points, (), mode)


# witness sets up to this size use a prefix-count table (side^2 int32 cells)
_TABLE_LIMIT = 4096


class _BoxCounter:
    """Number of witnesses strictly inside an axis box, from a prefix-count table.

    ``table[a, b]`` counts witnesses whose x-rank is below ``a`` and y-rank
    below ``b``. Box edges become rank cuts with searchsorted, the lower edge
    on the right so that a witness sharing a coordinate with a corner stays
    outside. Cuts grow with the coordinate, so a box's lower cut is the
    smaller of its corners' lower cuts and its upper cut the larger.
    """

    def __init__(self, wx: np.ndarray, wy: np.ndarray, px: np.ndarray, py: np.ndarray):
        m = wx.size
        sx, sy = np.sort(wx), np.sort(wy)
        grid = np.zeros((m + 1, m + 1), dtype=np.int32)
        grid[np.searchsorted(sx, wx) + 1, np.searchsorted(sy, wy) + 1] = 1
        self.flat = grid.cumsum(axis=0, dtype=np.int32).cumsum(axis=1, dtype=np.int32).ravel()
        # x cuts pre-multiplied by the row stride so a lookup is one addition
        stride = m + 1
        cut = lambda s, v, side: np.searchsorted(s, v, side).astype(np.int32)  # noqa: E731
        self.x_lower = cut(sx, px, "right") * np.int32(stride)
        self.x_upper = cut(sx, px, "left") * np.int32(stride)
        self.y_lower = cut(sy, py, "right")
        self.y_upper = cut(sy, py, "left")

    def count(self, I: np.ndarray, J: np.ndarray) -> np.ndarray:
        """Counts for the pairs (I, J), broadcast together."""
        x0 = np.minimum(self.x_lower[I], self.x_lower[J])
        x1 = np.maximum(self.x_upper[I], self.x_upper[J])
        y0 = np.minimum(self.y_lower[I], self.y_lower[J])
        y1 = np.maximum(self.y_upper[I], self.y_upper[J])
        t = self.flat
        return t.take(x1 + y1) - t.take(x0 + y1) - t.take(x1 + y0) + t.take(x0 + y0)


class _DirectCounter:
    """Same counts by testing each pair against each witness; for huge witness sets."""

    def __init__(self, wx: np.ndarray, wy: np.ndarray, px: np.ndarray, py: np.ndarray):
        self.wx, self.wy, self.px, self.py = wx, wy, px, py

    def count(self, I: np.ndarray, J: np.ndarray) -> np.ndarray:
        px, py = self.px, self.py
        lox, hix = np.minimum(px[I], px[J]), np.maximum(px[I], px[J])
        shape = lox.shape
        loy, hiy = np.minimum(py[I], py[J]), np.maximum(py[I], py[J])
        counts = _count_inside(lox.ravel(), hix.ravel(), loy.ravel(), hiy.ravel(), self.wx, self.wy)
        return counts.reshape(shape)


def _counter_for(px, py, wx, wy):
    kind = _DirectCounter if wx.size > _TABLE_LIMIT else _BoxCounter
    return kind(wx, wy, px, py)


def _oracle(pts, pos, neg, mode: str) -> Graph:
    px, py = _coords(pts)
    pos_counter = _counter_for(px, py, *_coords(pos))
    neg_counter = _counter_for(px, py, *_coords(neg)) if mode == "mixed" else None
    found_i, found_j = [], []
    for I, J in _pair_blocks(len(pts)):
        score = pos_counter.count(I, J)
        if mode == "mixed":
            score = score - neg_counter.count(I, J)
        sel = score == 0 if mode == "negative" else score > 0
        I, J = np.broadcast_arrays(I, J)
        found_i.append(I[sel])
        found_j.append(J[sel])
    if not found_i:
        return _graph_from_pairs(pts, [], [])
    return _graph_from_pairs(pts, np.concatenate(found_i), np.concatenate(found_j))


def score_matrix(scene: Scene) -> dict[tuple[str, str], int]:
    """S(p, q) = positive minus negative witnesses in B(p, q), for every pair."""
    out = {}
    for p, q in itertools.combinations(scene.points, 2):
        lx, hx = sorted((p.x, q.x))
        ly, hy = sorted((p.y, q.y))
        s = sum(1 for w in scene.pos_witnesses if lx < w.x < hx and ly < w.y < hy)
        s -= sum(1 for w in scene.neg_witnesses if lx < w.x < hx and ly < w.y < hy)
        out[(p.id, q.id) if p.id < q.id else (q.id, p.id)] = s
    return out


# -- output-sensitive sweep ----------------------------------------------------


def _dominance_pairs(ys: list[int], is_vertex: list[bool], positive: bool) -> tuple[array, array]:
    """Pairs (p, q) of vertices with q dominating p, as two arrays of y-ranks.

    ``ys`` is a permutation of ``range(len(ys))``: the y-ranks of all elements
    listed in increasing x. With ``positive`` a pair is reported iff some
    witness lies strictly between its endpoints in dominance order; otherwise
    iff none does. Pairs may be reported twice in the positive case.

    Divide and conquer on x. For a node split into A (left) and B (right),
    a witness between p in A and q in B belongs to A or to B, so::

        g[p] = min y over A-witnesses dominating p
        h[q] = max y over B-witnesses dominated by q
        witnessed(p, q)  <=>  y(q) > g[p]  or  y(p) < h[q]

    g and h are extended while merging up the recursion, so each level costs
    O(size) plus binary searches, and every output pair appears at exactly
    one node. Vertex runs and the output are int64 arrays, so the bulk of the
    output is copied slice by slice rather than element by element.
    """
    n = len(ys)
    inf = n + 1
    g = [inf] * n  # indexed by y-rank
    h = [-1] * n
    out_p = array("q")
    out_q = array("q")
    bl, br = bisect.bisect_left, bisect.bisect_right

    def repeat(y, count):
        return array("q", (y,)) * count

    def cross(avy, bvy):
        if positive:
            nb = len(bvy)
            for y in avy:
                t = g[y]
                if t != inf:
                    i = br(bvy, t)
                    if i < nb:
                        out_p.extend(repeat(y, nb - i))
                        out_q.extend(bvy[i:])
            for y in bvy:
                t = h[y]
                if t >= 0:
                    j = bl(avy, t)
                    if j:
                        out_p.extend(avy[:j])
                        out_q.extend(repeat(y, j))
            return
        # witness-free pairs: y(p) < y(q) < g[p] and h[q] < y(p).
        # Queries run in increasing y(p); a q becomes eligible once h[q] < y(p).
        pending = sorted(bvy, key=h.__getitem__)
        live = array("q")
        k, m = 0, len(pending)
        for y in avy:
            while k < m and h[pending[k]] < y:
                bisect.insort(live, pending[k])
                k += 1
            if live:
                lo, hi = br(live, y), bl(live, g[y])
                if lo < hi:
                    out_p.extend(repeat(y, hi - lo))
                    out_q.extend(live[lo:hi])

    def rec(lo, hi):
        if hi - lo == 1:
            return (array("q", (ys[lo],)), []) if is_vertex[lo] else (array("q"), [ys[lo]])
        mid = (lo + hi) // 2
        avy, awy = rec(lo, mid)
        bvy, bwy = rec(mid, hi)
        if avy and bvy:
            cross(avy, bvy)
        if bwy:
            nw = len(bwy)
            for y in avy:
                i = br(bwy, y)
                if i < nw and bwy[i] < g[y]:
                    g[y] = bwy[i]
        if awy:
            for y in bvy:
                j = bl(awy, y)
                if j and awy[j - 1] > h[y]:
                    h[y] = awy[j - 1]
        return array("q", sorted(avy + bvy)), sorted(awy + bwy)

    if n:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n.bit_length() + 100))
        rec(0, n)
    return out_p, out_q


def _ranked(values: list[int]) -> list[int]:
    order = sorted(range(len(values)), key=values.__getitem__)
    r = [0] * len(values)
    for k, i in enumerate(order):
        r[i] = k
    return r


def build_sweep(scene: Scene, mode: str = "positive") -> Graph:
    """Output-sensitive builder for the positive and negative modes.

    Same edge set as :func:`build_oracle`, in O(n log^2 n + k) time.
    """
    if mode == "mixed":
        raise WRGError("the sweep builder has no mixed mode; use build_oracle")
    pos, _ = _witness_split(scene, mode)
    pts = list(scene.points)
    els = pts + list(pos)
    nv = len(pts)
    if nv < 2:
        return Graph._trusted(tuple(p.id for p in pts), frozenset(), {})
    yrank = _ranked([p.y for p in els])
    elem_of_y = np.empty(len(els), dtype=np.int64)
    elem_of_y[yrank] = np.arange(len(els))
    chunks = []
    for mirror in (False, True):
        order = sorted(range(len(els)), key=(lambda i: -els[i].x) if mirror else (lambda i: els[i].x))
        ys = [yrank[i] for i in order]
        is_vertex = [i < nv for i in order]
        py, qy = _dominance_pairs(ys, is_vertex, mode == "positive")
        if py:
            I = elem_of_y[np.frombuffer(py, dtype=np.int64)]
            J = elem_of_y[np.frombuffer(qy, dtype=np.int64)]
            chunks.append(np.minimum(I, J) * nv + np.maximum(I, J))
    if not chunks:
        return _graph_from_pairs(pts, [], [])
    codes = np.concatenate(chunks)
    if 4 * codes.size >= nv * nv:
        # dense output: a pair bitmap dedupes in linear time
        seen = np.zeros(nv * nv, dtype=bool)
        seen[codes] = True
        codes = np.flatnonzero(seen)
    else:
        codes = np.unique(codes)
    return _graph_from_pairs(pts, codes // nv, codes % nv)


def build(scene: Scene, mode: str = "positive", algo: str = "sweep") -> Graph:
    if algo == "oracle" or mode == "mixed":
        return build_oracle(scene, mode)
    if algo == "sweep":
        return build_sweep(scene, mode)
    raise WRGError(f"unknown algorithm {algo!r}")


def build_rig(points: Sequence[PlanePoint]) -> Graph:
    """Rectangle-of-influence graph: p ~ q iff B(p, q) holds no third point."""
    pts = list(points)
    px, py = _coords(pts)
    found = []
    for i in range(len(pts) - 1):
        j = np.arange(i + 1, len(pts))
        lox, hix = np.minimum(px[i], px[j]), np.maximum(px[i], px[j])
        loy, hiy = np.minimum(py[i], py[j]), np.maximum(py[i], py[j])
        inside = (lox[:, None] < px) & (px < hix[:, None]) & (loy[:, None] < py) & (py < hiy[:, None])
        empty = ~inside.any(axis=1)
        found.extend((i, int(k)) for k in j[empty])
    return _graph_from_pairs(pts, [i for i, _ in found], [j for _, j in found])
