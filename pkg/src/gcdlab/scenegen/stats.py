"""Label statistics: balance histograms and inter-taxonomy mutual information."""

from __future__ import annotations

import numpy as np


def category_histogram(labels: np.ndarray, k: int = 10) -> np.ndarray:
    """Counts per category index 0..k-1."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size and (labels.min() < 0 or labels.max() >= k):
        raise ValueError("label outside 0..k-1")
    return np.bincount(labels, minlength=k)


def compute_taxonomy_nmi(labels_a, labels_b) -> float:
    """Normalized mutual information between two labelings, in [0, 1].

    Normalization is the arithmetic mean of the two entropies. A constant
    label vector has zero entropy; by convention the NMI is then 0.
    """
    a = np.asarray(labels_a, dtype=np.int64)
    b = np.asarray(labels_b, dtype=np.int64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("label vectors must be 1-D and equal length")
    n = a.size
    if n < 2:
        raise ValueError("need at least 2 samples")

    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    ka = ai.max() + 1
    kb = bi.max() + 1
    joint = np.zeros((ka, kb), dtype=np.float64)
    np.add.at(joint, (ai, bi), 1.0)
    joint /= n
    pa = joint.sum(axis=1)
    pb = joint.sum(axis=0)

    ha = -np.sum(pa[pa > 0] * np.log(pa[pa > 0]))
    hb = -np.sum(pb[pb > 0] * np.log(pb[pb > 0]))
    denom = 0.5 * (ha + hb)
    if denom <= 0.0:
        return 0.0

    nz = joint > 0
    mi = np.sum(joint[nz] * (np.log(joint[nz]) - np.log(np.outer(pa, pb)[nz])))
    return float(max(mi, 0.0) / denom)
