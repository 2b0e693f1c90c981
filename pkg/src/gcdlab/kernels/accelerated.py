"""Numba-compiled twins of the kernels in ``reference.py``.

Same names, same signatures, same tap orderings. Compiled with cache=True so
repeat runs skip JIT warmup; fastmath is deliberately left off to keep the
accumulation order (and therefore the bits) predictable.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def im2col(x, ksize, stride, pad):
    b, h, w, c = x.shape
    oh = (h + 2 * pad - ksize) // stride + 1
    ow = (w + 2 * pad - ksize) // stride + 1
    cols = np.zeros((b, oh, ow, ksize * ksize * c), dtype=x.dtype)
    for bi in range(b):
        for oy in range(oh):
            for ox in range(ow):
                for ky in range(ksize):
                    iy = oy * stride + ky - pad
                    if iy < 0 or iy >= h:
                        continue
                    for kx in range(ksize):
                        ix = ox * stride + kx - pad
                        if ix < 0 or ix >= w:
                            continue
                        base = (ky * ksize + kx) * c
                        for ci in range(c):
                            cols[bi, oy, ox, base + ci] = x[bi, iy, ix, ci]
    return cols


@njit(cache=True)
def col2im(cols, h, w, c, ksize, stride, pad):
    b, oh, ow, _ = cols.shape
    dx = np.zeros((b, h, w, c), dtype=cols.dtype)
    for bi in range(b):
        for ky in range(ksize):
            for kx in range(ksize):
                base = (ky * ksize + kx) * c
                for oy in range(oh):
                    iy = oy * stride + ky - pad
                    if iy < 0 or iy >= h:
                        continue
                    for ox in range(ow):
                        ix = ox * stride + kx - pad
                        if ix < 0 or ix >= w:
                            continue
                        for ci in range(c):
                            dx[bi, iy, ix, ci] += cols[bi, oy, ox, base + ci]
    return dx


@njit(cache=True)
def maxpool2(x):
    b, h, w, c = x.shape
    oh, ow = h // 2, w // 2
    y = np.empty((b, oh, ow, c), dtype=x.dtype)
    tap = np.empty((b, oh, ow, c), dtype=np.uint8)
    for bi in range(b):
        for oy in range(oh):
            for ox in range(ow):
                for ci in range(c):
                    best = x[bi, 2 * oy, 2 * ox, ci]
                    bt = np.uint8(0)
                    v = x[bi, 2 * oy, 2 * ox + 1, ci]
                    if v > best:
                        best = v
                        bt = np.uint8(1)
                    v = x[bi, 2 * oy + 1, 2 * ox, ci]
                    if v > best:
                        best = v
                        bt = np.uint8(2)
                    v = x[bi, 2 * oy + 1, 2 * ox + 1, ci]
                    if v > best:
                        best = v
                        bt = np.uint8(3)
                    y[bi, oy, ox, ci] = best
                    tap[bi, oy, ox, ci] = bt
    return y, tap


@njit(cache=True)
def maxpool2_backward(dy, tap):
    b, oh, ow, c = dy.shape
    dx = np.zeros((b, oh * 2, ow * 2, c), dtype=dy.dtype)
    for bi in range(b):
        for oy in range(oh):
            for ox in range(ow):
                for ci in range(c):
                    t = tap[bi, oy, ox, ci]
                    dx[bi, 2 * oy + t // 2, 2 * ox + t % 2, ci] = dy[bi, oy, ox, ci]
    return dx


@njit(cache=True)
def affine_sample(img, mat, out_h, out_w, fill):
    h, w, c = img.shape
    out = np.empty((out_h, out_w, c), dtype=img.dtype)
    for oy in range(out_h):
        for ox in range(out_w):
            sr = mat[0, 0] * oy + mat[0, 1] * ox + mat[0, 2]
            sc = mat[1, 0] * oy + mat[1, 1] * ox + mat[1, 2]
            r0 = int(np.floor(sr))
            c0 = int(np.floor(sc))
            fr = sr - r0
            fc = sc - c0
            for ci in range(c):
                # corner fetch with constant fill outside the source
                if 0 <= r0 < h and 0 <= c0 < w:
                    v00 = img[r0, c0, ci]
                else:
                    v00 = fill[ci]
                if 0 <= r0 < h and 0 <= c0 + 1 < w:
                    v01 = img[r0, c0 + 1, ci]
                else:
                    v01 = fill[ci]
                if 0 <= r0 + 1 < h and 0 <= c0 < w:
                    v10 = img[r0 + 1, c0, ci]
                else:
                    v10 = fill[ci]
                if 0 <= r0 + 1 < h and 0 <= c0 + 1 < w:
                    v11 = img[r0 + 1, c0 + 1, ci]
                else:
                    v11 = fill[ci]
                top = v00 * (1.0 - fc) + v01 * fc
                bot = v10 * (1.0 - fc) + v11 * fc
                out[oy, ox, ci] = top * (1.0 - fr) + bot * fr
    return out


@njit(cache=True)
def gaussian_blur(img, kernel):
    h, w, c = img.shape
    radius = len(kernel) // 2
    tmp = np.zeros_like(img)
    for y in range(h):
        for x in range(w):
            for ci in range(c):
                acc = 0.0
                for i in range(len(kernel)):
                    yy = y + i - radius
                    if yy < 0:
                        yy = 0
                    elif yy >= h:
                        yy = h - 1
                    acc += kernel[i] * img[yy, x, ci]
                tmp[y, x, ci] = acc
    out = np.zeros_like(img)
    for y in range(h):
        for x in range(w):
            for ci in range(c):
                acc = 0.0
                for i in range(len(kernel)):
                    xx = x + i - radius
                    if xx < 0:
                        xx = 0
                    elif xx >= w:
                        xx = w - 1
                    acc += kernel[i] * tmp[y, xx, ci]
                out[y, x, ci] = acc
    return out


@njit(cache=True)
def sqdist(a, b):
    n, d = a.shape
    m = b.shape[0]
    out = np.empty((n, m), dtype=a.dtype)
    for i in range(n):
        for j in range(m):
            acc = 0.0
            for k in range(d):
                diff = a[i, k] - b[j, k]
                acc += diff * diff
            out[i, j] = acc
    return out
