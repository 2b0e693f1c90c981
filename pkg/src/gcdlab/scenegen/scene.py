"""Scene parameter sampling: attributes, object placement, nuisance factors.

A scene fixes one category per taxonomy; every object in the scene shares the
scene's shape/color/texture and differs only in nuisance factors (position,
size, rotation). Coordinates are canvas-relative in [0, 1] so a SceneParams
renders identically at any resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .taxonomy import TaxonomySpec, N_CATEGORIES

# discrete object radii, fractions of the canvas side
OBJECT_SIZES = (0.11, 0.14, 0.17)

MAX_IOU = 0.15
MAX_POSITION_RETRIES = 100
MAX_SIZE_RESAMPLES = 40


class PlacementError(RuntimeError):
    """Raised when no non-overlapping object placement could be found."""


@dataclass(frozen=True)
class ObjectInstance:
    """One object's nuisance factors; x, y, size are canvas-relative."""

    x: float
    y: float
    size: float
    rotation: float


@dataclass(frozen=True)
class SceneParams:
    shape_id: int
    color_id: int
    texture_id: int
    count: int
    objects: tuple[ObjectInstance, ...]

    def validate(self) -> None:
        if not (1 <= self.count <= 10):
            raise ValueError(f"count {self.count} outside 1..10")
        for idx in (self.shape_id, self.color_id, self.texture_id):
            if not (0 <= idx < N_CATEGORIES):
                raise ValueError(f"category index {idx} outside 0..{N_CATEGORIES - 1}")
        if len(self.objects) != self.count:
            raise ValueError(f"{len(self.objects)} objects but count={self.count}")
        for o in self.objects:
            if not (o.size <= o.x <= 1 - o.size and o.size <= o.y <= 1 - o.size):
                raise ValueError(f"object at ({o.x:.3f},{o.y:.3f}) r={o.size} leaves the canvas")

    def labels(self) -> dict[str, int]:
        """Category index per taxonomy (count maps to index count-1)."""
        return {
            "shape": self.shape_id,
            "color": self.color_id,
            "texture": self.texture_id,
            "count": self.count - 1,
        }


def _bbox_iou(x0: float, y0: float, r0: float, x1: float, y1: float, r1: float) -> float:
    ix = min(x0 + r0, x1 + r1) - max(x0 - r0, x1 - r1)
    iy = min(y0 + r0, y1 + r1) - max(y0 - r0, y1 - r1)
    if ix <= 0.0 or iy <= 0.0:
        return 0.0
    inter = ix * iy
    union = 4.0 * r0 * r0 + 4.0 * r1 * r1 - inter
    return inter / union


def _place_objects(rng: np.random.Generator, sizes: np.ndarray) -> list[ObjectInstance] | None:
    placed: list[ObjectInstance] = []
    for r in sizes:
        r = float(r)
        for _ in range(MAX_POSITION_RETRIES):
            x = float(rng.uniform(r, 1.0 - r))
            y = float(rng.uniform(r, 1.0 - r))
            if all(_bbox_iou(x, y, r, o.x, o.y, o.size) <= MAX_IOU for o in placed):
                rot = float(rng.uniform(0.0, 2.0 * np.pi))
                placed.append(ObjectInstance(x, y, r, rot))
                break
        else:
            return None
    return placed


def sample_scene(rng: np.random.Generator, specs: list[TaxonomySpec]) -> SceneParams:
    """Draw one scene with independent uniform attributes.

    Each taxonomy's category is sampled uniformly and independently of the
    others. Objects are placed by rejection sampling under the pairwise
    bounding-box overlap cap; if a size combination cannot be placed, all
    sizes are redrawn before giving up with PlacementError.
    """
    names = {s.name for s in specs}
    if names != {"shape", "color", "texture", "count"}:
        raise ValueError(f"specs must cover all four taxonomies, got {sorted(names)}")

    shape_id = int(rng.integers(N_CATEGORIES))
    color_id = int(rng.integers(N_CATEGORIES))
    texture_id = int(rng.integers(N_CATEGORIES))
    count = int(rng.integers(1, 11))

    for _ in range(MAX_SIZE_RESAMPLES):
        sizes = rng.choice(np.asarray(OBJECT_SIZES), size=count)
        placed = _place_objects(rng, sizes)
        if placed is not None:
            return SceneParams(shape_id, color_id, texture_id, count, tuple(placed))
    raise PlacementError(
        f"could not place {count} objects after {MAX_SIZE_RESAMPLES} size resamples"
    )
