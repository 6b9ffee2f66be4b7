"""Every graph as a mixed-sign witness graph with at most (n-1)^2 witnesses."""

from __future__ import annotations

from ..geometry import PlanePoint, Scene
from ..graph import Graph
from .models import Realization, fresh_names, verified


def realize_pm(g: Graph, order=None) -> Realization:
    """Vertices on the diagonal, at most one signed witness per grid cell.

    Pairs are handled by increasing index gap k. The score of the box of
    (i, i+k) equals the scores of its three sub-boxes combined by
    inclusion-exclusion plus the two corner cells they miss, so setting those
    two corners fixes the score to 1 for edges and 0 otherwise.
    """
    verts = list(g.vertices if order is None else order)
    if sorted(verts) != sorted(g.vertices):
        raise ValueError("order must list every vertex exactly once")
    n = len(verts)
    spacing = 2 * (n - 1) ** 2 + 2
    target = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            target[i][j] = int(g.has_edge(verts[i], verts[j]))

    score = [[0] * n for _ in range(n)]
    # (column, row, sign) in cell coordinates; cell c spans (c, c+1) in vertex ranks
    placed: list[tuple[int, int, int]] = []
    for i in range(n - 1):
        if target[i][i + 1]:
            placed.append((i, i, 1))
        score[i][i + 1] = target[i][i + 1]
    for k in range(2, n):
        for i in range(n - k):
            j = i + k
            base = score[i + 1][j] + score[i][j - 1] - score[i + 1][j - 1]
            need = target[i][j] - base
            top_left, bottom_right = (i, j - 1), (j - 1, i)
            if need == 2:
                placed += [(*top_left, 1), (*bottom_right, 1)]
            elif need == 1:
                placed.append((*top_left, 1))
            elif need == -1:
                placed.append((*top_left, -1))
            elif need == -2:
                placed += [(*top_left, -1), (*bottom_right, -1)]
            score[i][j] = target[i][j]

    names = fresh_names("w", len(placed), verts)
    pos, neg = [], []
    for t, (name, (col, row, sign)) in enumerate(zip(names, placed), 1):
        w = PlanePoint(name, spacing * (col + 1) + 2 * t - 1, spacing * (row + 1) + 2 * t - 1)
        (pos if sign > 0 else neg).append(w)
    points = [PlanePoint(v, spacing * (i + 1), spacing * (i + 1)) for i, v in enumerate(verts)]
    real = Realization(Scene(points, pos, neg), {v: v for v in verts}, mode="mixed", notes={"spacing": spacing})
    return verified(real, g)
