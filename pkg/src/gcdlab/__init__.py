"""gcdlab: a small laboratory for category discovery on synthetic scenes.

The package renders a controllable multi-attribute image dataset, trains
contrastive and mean-teacher models on it without any deep-learning framework
(numpy forward/backward passes, optional numba acceleration), and scores the
resulting clusterings against hidden category labels.
"""

__version__ = "0.1.0"
