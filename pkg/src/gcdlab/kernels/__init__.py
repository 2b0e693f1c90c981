"""Backend dispatch for the hot numeric kernels.

Two interchangeable implementations live side by side:

* ``reference``   – pure numpy, always available
* ``accelerated`` – numba @njit twins of the same functions

Selection happens once at import time from the ``GCDLAB_BACKEND`` environment
variable (``numba`` or ``numpy``). Default is numba when it imports cleanly,
otherwise the numpy fallback. ``backend_name()`` reports which one won.
"""

from __future__ import annotations

import importlib
import os

from . import reference

_requested = os.environ.get("GCDLAB_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"GCDLAB_BACKEND={_requested!r} not understood; use 'numba' or 'numpy'"
    )

accelerated = None
if _requested != "numpy":
    try:
        accelerated = importlib.import_module(".accelerated", __name__)
    except ImportError:
        if _requested == "numba":
            raise

_impl = accelerated if accelerated is not None else reference

im2col = _impl.im2col
col2im = _impl.col2im
maxpool2 = _impl.maxpool2
maxpool2_backward = _impl.maxpool2_backward
affine_sample = _impl.affine_sample
gaussian_blur = _impl.gaussian_blur
sqdist = _impl.sqdist


def backend_name() -> str:
    """Which kernel implementation is active: 'numba' or 'numpy'."""
    return "numba" if _impl is accelerated else "numpy"


__all__ = [
    "im2col",
    "col2im",
    "maxpool2",
    "maxpool2_backward",
    "affine_sample",
    "gaussian_blur",
    "sqdist",
    "backend_name",
    "reference",
    "accelerated",
]
