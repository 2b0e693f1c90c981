"""Silhouette inside-tests for the ten shape categories.

Every shape is defined in object-local coordinates (u, v) with the object
inscribed in the unit disk, so a bounding box of side 2r covers any rotation.
All tests are vectorized over coordinate grids and return boolean masks.
"""

from __future__ import annotations

import numpy as np


def _in_polygon(u: np.ndarray, v: np.ndarray, verts: np.ndarray) -> np.ndarray:
    """Even-odd ray-casting point-in-polygon test, vectorized over a grid."""
    inside = np.zeros(u.shape, dtype=bool)
    x0, y0 = verts[-1]
    for x1, y1 in verts:
        crosses = (y0 > v) != (y1 > v)
        denom = y1 - y0
        denom = denom if denom != 0.0 else 1.0  # crosses is False on horizontal edges
        xint = x0 + (v - y0) * (x1 - x0) / denom
        inside ^= crosses & (u < xint)
        x0, y0 = x1, y1
    return inside


def _regular_polygon(n: int, radius: float, phase: float = 0.0) -> np.ndarray:
    ang = phase + 2.0 * np.pi * np.arange(n) / n
    return np.stack([radius * np.cos(ang), radius * np.sin(ang)], axis=1)


def _star_vertices(points: int, r_outer: float, r_inner: float) -> np.ndarray:
    ang = np.pi / 2 + np.pi * np.arange(2 * points) / points
    rad = np.where(np.arange(2 * points) % 2 == 0, r_outer, r_inner)
    return np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=1)


_TRIANGLE = _regular_polygon(3, 0.95, phase=np.pi / 2)
_HEXAGON = _regular_polygon(6, 0.92)
_STAR = _star_vertices(5, 0.95, 0.40)


def _circle(u, v):
    return u * u + v * v <= 0.90 * 0.90


def _square(u, v):
    return np.maximum(np.abs(u), np.abs(v)) <= 0.78


def _triangle(u, v):
    return _in_polygon(u, v, _TRIANGLE)


def _star(u, v):
    return _in_polygon(u, v, _STAR)


def _cross(u, v):
    au, av = np.abs(u), np.abs(v)
    return ((au <= 0.30) & (av <= 0.92)) | ((av <= 0.30) & (au <= 0.92))


def _hexagon(u, v):
    return _in_polygon(u, v, _HEXAGON)


def _crescent(u, v):
    s2 = u * u + v * v
    du = u - 0.42
    return (s2 <= 0.90 * 0.90) & (du * du + v * v >= 0.62 * 0.62)


def _gear(u, v):
    s = np.sqrt(u * u + v * v)
    phi = np.arctan2(v, u)
    tooth = np.cos(8.0 * phi) > 0.2
    body = (s > 0.20) & (s <= 0.62)
    teeth = tooth & (s > 0.20) & (s <= 0.92)
    return body | teeth


def _heart(u, v):
    # classic sextic heart curve, scaled to sit inside the unit disk
    x = u / 0.78
    y = v / 0.78 + 0.25
    q = x * x + y * y - 1.0
    return q * q * q - x * x * y * y * y <= 0.0


def _annulus(u, v):
    s2 = u * u + v * v
    return (s2 >= 0.52 * 0.52) & (s2 <= 0.92 * 0.92)


_SHAPE_FUNCS = {
    "circle": _circle,
    "square": _square,
    "triangle": _triangle,
    "star": _star,
    "cross": _cross,
    "hexagon": _hexagon,
    "crescent": _crescent,
    "gear": _gear,
    "heart": _heart,
    "annulus": _annulus,
}


def shape_mask(name: str, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Boolean inside-mask of shape ``name`` at local coordinates (u, v)."""
    try:
        fn = _SHAPE_FUNCS[name]
    except KeyError:
        raise ValueError(f"unknown shape {name!r}") from None
    return fn(u, v)
