"""Binary pattern masks for the ten texture categories.

Masks are evaluated in object-local coordinates, so patterns rotate and scale
with the object they cover. True marks cells that get darkened over the fill
color. The patterns are deliberately differentiated by duty cycle (dark-area
fraction) as well as geometry, so pairs like wide bands vs. fine pinstripes
stay separable at small object sizes and under arbitrary rotation.
"""

from __future__ import annotations

import numpy as np


def _frac(x):
    return x - np.floor(x)


def _solid(u, v):
    return np.zeros(u.shape, dtype=bool)


def _checker(u, v):
    cell = 0.32
    return ((np.floor(u / cell) + np.floor(v / cell)) % 2).astype(bool)


def _stripes(u, v):
    return _frac(v / 0.50) < 0.5


def _dots(u, v):
    period = 0.50
    du = _frac(u / period) - 0.5
    dv = _frac(v / period) - 0.5
    lim = 0.16 / period
    return du * du + dv * dv <= lim * lim


def _zigzag(u, v):
    tri = 2.0 * np.abs(_frac(u / 0.90) - 0.5)  # unit triangle wave
    return _frac((v + 0.22 * tri) / 0.45) < 0.5


def _grid(u, v):
    period = 0.45
    width = 0.22
    return (_frac(u / period) < width) | (_frac(v / period) < width)


def _diagonal(u, v):
    # fine low-duty pinstripes at 45 deg in local coordinates
    return _frac((u + v) / 0.40) < 0.25


def _rings(u, v):
    s = np.sqrt(u * u + v * v)
    return _frac(s / 0.45) < 0.5


def _speckle(u, v):
    cell = 0.22
    i = np.floor(u / cell).astype(np.int64)
    j = np.floor(v / cell).astype(np.int64)
    h = (i * np.int64(2654435761) + j * np.int64(40503)) % np.int64(977)
    h = (h + 977) % 977
    return h < 537  # about 55% dark cells


def _brick(u, v):
    course_h = 0.38
    brick_w = 0.62
    mortar = 0.16
    row = np.floor(v / course_h)
    uo = u + 0.5 * brick_w * (row % 2)
    return (_frac(v / course_h) < mortar) | (_frac(uo / brick_w) < mortar)


_TEXTURE_FUNCS = {
    "solid": _solid,
    "checker": _checker,
    "stripes": _stripes,
    "dots": _dots,
    "zigzag": _zigzag,
    "grid": _grid,
    "diagonal": _diagonal,
    "rings": _rings,
    "speckle": _speckle,
    "brick": _brick,
}


def texture_mask(name: str, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Boolean darkening mask of texture ``name`` at local coordinates (u, v)."""
    try:
        fn = _TEXTURE_FUNCS[name]
    except KeyError:
        raise ValueError(f"unknown texture {name!r}") from None
    return fn(u, v)
