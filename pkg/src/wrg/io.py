"""JSON encodings of scenes, point lists and graphs."""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from .geometry import PlanePoint, Scene, normalize_scene


def point_to_json(p: PlanePoint) -> dict:
    return {"id": p.id, "x": p.x, "y": p.y}


def points_to_json(points: Sequence[PlanePoint]) -> list[dict]:
    return [point_to_json(p) for p in points]


def points_from_json(items) -> list[PlanePoint]:
    """Integer points from a JSON list; decimals are scaled like scenes are."""
    scene = normalize_scene({"points": list(items)}).scene
    return list(scene.points)


def scene_to_json(scene: Scene) -> dict:
    witnesses = [{**point_to_json(w), "sign": "+"} for w in scene.pos_witnesses]
    witnesses += [{**point_to_json(w), "sign": "-"} for w in scene.neg_witnesses]
    return {"points": points_to_json(scene.points), "witnesses": witnesses}


def scene_from_json(data: Mapping) -> Scene:
    return normalize_scene(data).scene


def dumps(obj) -> str:
    """Canonical, diff-friendly JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
