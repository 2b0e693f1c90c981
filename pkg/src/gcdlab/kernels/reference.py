"""Pure-numpy reference implementations of the hot kernels.

Every function here has an identically-named twin in ``accelerated.py``
compiled with numba. The reference versions are kept vectorized (no Python
per-pixel loops) so the fallback path is still usable for real runs, just
slower. All image tensors are NHWC (or HWC for single images), float32.
"""

from __future__ import annotations

import numpy as np


def im2col(x: np.ndarray, ksize: int, stride: int, pad: int) -> np.ndarray:
    """Unfold (B,H,W,C) into (B,OH,OW,ksize*ksize*C) patch columns.

    Tap order inside the last axis is (ky, kx, c), matching col2im and the
    accelerated twin.
    """
    b, h, w, c = x.shape
    xpad = np.pad(x, ((0, 0), (pad, pad), (pad, pad), (0, 0)))
    win = np.lib.stride_tricks.sliding_window_view(xpad, (ksize, ksize), axis=(1, 2))
    # win: (B, H', W', C, ky, kx) -> subsample by stride, reorder to (ky, kx, c)
    win = win[:, ::stride, ::stride]
    oh, ow = win.shape[1], win.shape[2]
    cols = win.transpose(0, 1, 2, 4, 5, 3).reshape(b, oh, ow, ksize * ksize * c)
    return np.ascontiguousarray(cols)


def col2im(
    cols: np.ndarray, h: int, w: int, c: int, ksize: int, stride: int, pad: int
) -> np.ndarray:
    """Fold patch columns back to (B,H,W,C), accumulating overlaps.

    Adjoint of im2col; used for the conv input gradient.
    """
    b, oh, ow, _ = cols.shape
    dxpad = np.zeros((b, h + 2 * pad, w + 2 * pad, c), dtype=cols.dtype)
    cols6 = cols.reshape(b, oh, ow, ksize, ksize, c)
    for ky in range(ksize):
        for kx in range(ksize):
            dxpad[:, ky : ky + oh * stride : stride, kx : kx + ow * stride : stride, :] += cols6[
                :, :, :, ky, kx, :
            ]
    if pad:
        return dxpad[:, pad : pad + h, pad : pad + w, :]
    return dxpad


def maxpool2(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """2x2/stride-2 max pool of (B,H,W,C) with even H, W.

    Returns (pooled, tap) where tap in {0,1,2,3} encodes the argmax corner
    (2*dy + dx, first max wins on ties).
    """
    taps = np.stack(
        [x[:, ::2, ::2], x[:, ::2, 1::2], x[:, 1::2, ::2], x[:, 1::2, 1::2]], axis=-1
    )
    tap = taps.argmax(axis=-1).astype(np.uint8)
    y = np.take_along_axis(taps, tap[..., None].astype(np.intp), axis=-1)[..., 0]
    return y, tap


def maxpool2_backward(dy: np.ndarray, tap: np.ndarray) -> np.ndarray:
    """Scatter pooled gradients back through the recorded argmax taps."""
    b, oh, ow, c = dy.shape
    dx = np.zeros((b, oh * 2, ow * 2, c), dtype=dy.dtype)
    for t, (sy, sx) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        sel = tap == t
        view = dx[:, sy::2, sx::2]
        view[sel] = dy[sel]
    return dx


def affine_sample(
    img: np.ndarray, mat: np.ndarray, out_h: int, out_w: int, fill: np.ndarray
) -> np.ndarray:
    """Bilinear resample of an HWC image under an output->input affine map.

    ``mat`` is 2x3 acting on (row, col, 1) output coordinates; samples that
    fall outside the source image blend toward the constant ``fill`` color.
    """
    h, w, c = img.shape
    oy, ox = np.meshgrid(
        np.arange(out_h, dtype=np.float64), np.arange(out_w, dtype=np.float64), indexing="ij"
    )
    m = mat.astype(np.float64)
    sr = m[0, 0] * oy + m[0, 1] * ox + m[0, 2]
    sc = m[1, 0] * oy + m[1, 1] * ox + m[1, 2]
    r0 = np.floor(sr)
    c0 = np.floor(sc)
    fr = (sr - r0)[..., None]
    fc = (sc - c0)[..., None]
    r0 = r0.astype(np.int64)
    c0 = c0.astype(np.int64)

    def corner(ri, ci):
        inside = (ri >= 0) & (ri < h) & (ci >= 0) & (ci < w)
        vals = img[np.clip(ri, 0, h - 1), np.clip(ci, 0, w - 1)]
        return np.where(inside[..., None], vals, fill)

    v00 = corner(r0, c0)
    v01 = corner(r0, c0 + 1)
    v10 = corner(r0 + 1, c0)
    v11 = corner(r0 + 1, c0 + 1)
    top = v00 * (1.0 - fc) + v01 * fc
    bot = v10 * (1.0 - fc) + v11 * fc
    return (top * (1.0 - fr) + bot * fr).astype(img.dtype)


def gaussian_blur(img: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Separable blur of an HWC image with a 1-D kernel, edge-replicated."""
    radius = len(kernel) // 2
    out = np.zeros_like(img)
    padded = np.pad(img, ((radius, radius), (0, 0), (0, 0)), mode="edge")
    for i, kv in enumerate(kernel):
        out += kv * padded[i : i + img.shape[0]]
    out2 = np.zeros_like(img)
    padded = np.pad(out, ((0, 0), (radius, radius), (0, 0)), mode="edge")
    for i, kv in enumerate(kernel):
        out2 += kv * padded[:, i : i + img.shape[1]]
    return out2


def sqdist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise squared euclidean distances (N,D)x(M,D) -> (N,M)."""
    aa = np.einsum("nd,nd->n", a, a)[:, None]
    bb = np.einsum("md,md->m", b, b)[None, :]
    d = aa + bb - 2.0 * (a @ b.T)
    return np.maximum(d, 0.0)
