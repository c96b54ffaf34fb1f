"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; otherwise
the numpy-based fallback takes over.  ZETADELTA_KERNELS=python|cython
forces a choice (the benchmark and the cross-backend tests use it).

Both backends expose the same flat interface:

    log_gamma, digamma, log_delta, delta_logderiv, theta,
    zeta_em, zeta_em_batch, newton_delta,
    log_delta_batch, delta_logderiv_batch, winding_integrand_batch,
    name
"""

import os

from . import _kernels_py

_forced = os.environ.get("ZETADELTA_KERNELS", "").strip().lower()

if _forced == "python":
    kernels = _kernels_py
elif _forced == "cython":
    from . import _kernels_cy as kernels  # ImportError here is intentional
else:
    try:
        from . import _kernels_cy as kernels
    except ImportError:
        kernels = _kernels_py


def backend_name():
    """Name of the kernel backend in use ('cython' or 'python')."""
    return kernels.name
