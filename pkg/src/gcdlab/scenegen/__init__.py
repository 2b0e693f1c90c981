from .taxonomy import TaxonomySpec, default_taxonomies, COLOR_RGB, SHAPE_NAMES, TEXTURE_NAMES
from .scene import ObjectInstance, SceneParams, PlacementError, sample_scene
from .render import render_scene, BACKGROUND_RGB
from .dataset import generate_dataset, load_manifest, manifest_labels, load_images
from .stats import compute_taxonomy_nmi, category_histogram

__all__ = [
    "TaxonomySpec",
    "default_taxonomies",
    "COLOR_RGB",
    "SHAPE_NAMES",
    "TEXTURE_NAMES",
    "ObjectInstance",
    "SceneParams",
    "PlacementError",
    "sample_scene",
    "render_scene",
    "BACKGROUND_RGB",
    "generate_dataset",
    "load_manifest",
    "manifest_labels",
    "load_images",
    "compute_taxonomy_nmi",
    "category_histogram",
]
