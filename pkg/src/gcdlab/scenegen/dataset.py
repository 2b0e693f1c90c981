"""Dataset generation and manifest / image IO.

A dataset directory holds ``images/{sample_id:06d}.png``, a ``manifest.json``
describing every sample's labels plus the taxonomy definitions, and an
``images.npy`` cache of the decoded pixel stack for fast reloading (the PNGs
remain the canonical interface).

Generation is a pure function of (seed, sample_id): each sample derives its
own rng stream, so the manifest is byte-identical across machines and the
pixels are reproducible bit-exactly on one machine.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np
from PIL import Image

from .render import render_scene, to_uint8
from .scene import sample_scene, SceneParams
from .taxonomy import COLOR_RGB, default_taxonomies

MANIFEST_VERSION = 1
MIN_IMAGES = 200


def _sample_rng(seed: int, sample_id: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, sample_id)))


def scene_for_sample(seed: int, sample_id: int) -> SceneParams:
    """Regenerate the SceneParams of one sample from the dataset seed."""
    specs = list(default_taxonomies().values())
    return sample_scene(_sample_rng(seed, sample_id), specs)


def manifest_dict(n_images: int, seed: int, canvas: int, rows: list[dict]) -> dict:
    taxos = default_taxonomies()
    return {
        "version": MANIFEST_VERSION,
        "seed": seed,
        "canvas": canvas,
        "n_images": n_images,
        "taxonomies": {
            name: {
                "categories": list(spec.categories),
                "old_categories": list(spec.old_categories),
                **({"rgb": {c: list(COLOR_RGB[c]) for c in spec.categories}} if name == "color" else {}),
            }
            for name, spec in taxos.items()
        },
        "samples": rows,
    }


def dump_manifest(manifest: dict) -> str:
    """Canonical manifest serialization (sorted keys, no whitespace)."""
    return json.dumps(manifest, sort_keys=True, separators=(",", ":")) + "\n"


def generate_dataset(
    n_images: int,
    seed: int,
    out_dir: str | os.PathLike,
    canvas: int = 128,
    overwrite: bool = False,
    write_cache: bool = True,
) -> dict:
    """Render ``n_images`` scenes into ``out_dir`` and return the manifest."""
    if n_images < MIN_IMAGES:
        raise ValueError(f"n_images {n_images} below minimum {MIN_IMAGES}")
    out = Path(out_dir)
    manifest_path = out / "manifest.json"
    if manifest_path.exists() and not overwrite:
        raise FileExistsError(f"{manifest_path} exists; pass overwrite to regenerate")
    img_dir = out / "images"
    img_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    stack = np.empty((n_images, canvas, canvas, 3), dtype=np.uint8)
    for sample_id in range(n_images):
        scene = scene_for_sample(seed, sample_id)
        pixels = to_uint8(render_scene(scene, canvas=canvas))
        stack[sample_id] = pixels
        Image.fromarray(pixels).save(img_dir / f"{sample_id:06d}.png")
        rows.append(
            {
                "sample_id": sample_id,
                "shape": scene.shape_id,
                "color": scene.color_id,
                "texture": scene.texture_id,
                "count": scene.count,
            }
        )

    manifest = manifest_dict(n_images, seed, canvas, rows)
    manifest_path.write_text(dump_manifest(manifest))
    if write_cache:
        np.save(out / "images.npy", stack)
    return manifest


def load_manifest(dataset_dir: str | os.PathLike) -> dict:
    path = Path(dataset_dir) / "manifest.json"
    with open(path) as fh:
        manifest = json.load(fh)
    if manifest.get("version") != MANIFEST_VERSION:
        raise ValueError(f"{path}: unsupported manifest version {manifest.get('version')}")
    return manifest


def manifest_labels(manifest: dict, taxonomy: str) -> np.ndarray:
    """Category indices (0..9) of every sample under one taxonomy."""
    if taxonomy not in manifest["taxonomies"]:
        raise KeyError(f"taxonomy {taxonomy!r} not in manifest")
    rows = manifest["samples"]
    if taxonomy == "count":
        return np.asarray([r["count"] - 1 for r in rows], dtype=np.int64)
    return np.asarray([r[taxonomy] for r in rows], dtype=np.int64)


def load_images(dataset_dir: str | os.PathLike, manifest: dict | None = None) -> np.ndarray:
    """Load the full image stack as uint8 (N,H,W,3), preferring the npy cache."""
    root = Path(dataset_dir)
    if manifest is None:
        manifest = load_manifest(root)
    n = manifest["n_images"]
    canvas = manifest["canvas"]
    cache = root / "images.npy"
    if cache.exists():
        stack = np.load(cache)
        if stack.shape == (n, canvas, canvas, 3):
            return stack
    stack = np.empty((n, canvas, canvas, 3), dtype=np.uint8)
    for row in manifest["samples"]:
        sid = row["sample_id"]
        with Image.open(root / "images" / f"{sid:06d}.png") as im:
            stack[sid] = np.asarray(im.convert("RGB"))
    return stack
