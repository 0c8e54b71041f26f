"""Numeric inner loops: compiled core with a pure-numpy fallback.

Both implementations accumulate contributions in the same order, so results
are bit-for-bit identical whichever backend is active.  Set the environment
variable ``LATTICELIGHT_PURE=1`` to force the fallback (used by the kernel
benchmark and by tests).
"""

import os

if os.environ.get("LATTICELIGHT_PURE"):
    from . import _fallback as _impl

    backend = "fallback"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        backend = "compiled"
    except ImportError:
        from . import _fallback as _impl

        backend = "fallback"

convolve_shift = _impl.convolve_shift
lorentzian_mixture = _impl.lorentzian_mixture

__all__ = ["backend", "convolve_shift", "lorentzian_mixture"]
