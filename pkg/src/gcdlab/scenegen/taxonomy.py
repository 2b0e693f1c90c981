"""Taxonomy definitions for the four-attribute synthetic dataset.

Each image is described by four independent attributes (shape, color,
texture, count), and each attribute doubles as a 10-way classification
taxonomy. The first five categories of every taxonomy are the "old"
(labelled-set) classes; the remaining five only ever appear unlabelled.
"""

from __future__ import annotations

from dataclasses import dataclass

TAXONOMY_NAMES = ("shape", "color", "texture", "count")

SHAPE_NAMES = (
    "circle",
    "square",
    "triangle",
    "star",
    "cross",
    "hexagon",
    "crescent",
    "gear",
    "heart",
    "annulus",
)

TEXTURE_NAMES = (
    "solid",
    "checker",
    "stripes",
    "dots",
    "zigzag",
    "grid",
    "diagonal",
    "rings",
    "speckle",
    "brick",
)

COLOR_NAMES = (
    "gray",
    "red",
    "blue",
    "green",
    "brown",
    "purple",
    "cyan",
    "yellow",
    "pink",
    "orange",
)

# fixed fill colors, 8-bit RGB; also recorded in the dataset manifest
COLOR_RGB = {
    "gray": (87, 87, 87),
    "red": (173, 35, 35),
    "blue": (42, 75, 215),
    "green": (29, 105, 20),
    "brown": (129, 74, 25),
    "purple": (129, 38, 192),
    "cyan": (41, 208, 208),
    "yellow": (255, 238, 51),
    "pink": (255, 205, 243),
    "orange": (255, 146, 51),
}

COUNT_NAMES = tuple(str(i) for i in range(1, 11))

N_CATEGORIES = 10
N_OLD = 5


@dataclass(frozen=True)
class TaxonomySpec:
    """One taxonomy: an ordered category list whose first five are 'old'."""

    name: str
    categories: tuple[str, ...]

    def __post_init__(self):
        if self.name not in TAXONOMY_NAMES:
            raise ValueError(f"unknown taxonomy {self.name!r}, expected one of {TAXONOMY_NAMES}")
        if len(self.categories) != N_CATEGORIES:
            raise ValueError(f"{self.name}: need {N_CATEGORIES} categories, got {len(self.categories)}")
        if len(set(self.categories)) != N_CATEGORIES:
            raise ValueError(f"{self.name}: duplicate category identifiers")

    @property
    def old_categories(self) -> tuple[str, ...]:
        return self.categories[:N_OLD]

    @property
    def k(self) -> int:
        return len(self.categories)


def default_taxonomies() -> dict[str, TaxonomySpec]:
    """The standard four taxonomies, keyed by name."""
    return {
        "shape": TaxonomySpec("shape", SHAPE_NAMES),
        "color": TaxonomySpec("color", COLOR_NAMES),
        "texture": TaxonomySpec("texture", TEXTURE_NAMES),
        "count": TaxonomySpec("count", COUNT_NAMES),
    }
