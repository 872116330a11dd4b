"""Kernel backend selection, resolved once at import.

The compiled Cython kernels are preferred when the extension was built;
otherwise the pure-Python twins take over transparently.  Both backends
produce bit-identical results (the test suite proves it); only speed
differs.  POWERSUM_KERNELS=py|c|auto forces a choice, which is mainly
useful for benchmarking and for exercising the fallback in CI.
"""

import os

from . import pykernels

_choice = os.environ.get("POWERSUM_KERNELS", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import cykernels as _impl
    except ImportError:
        _impl = pykernels
elif _choice in ("py", "python"):
    _impl = pykernels
elif _choice in ("c", "cy", "cython", "compiled"):
    # An explicit request for the extension must not silently degrade.
    from . import cykernels as _impl
else:
    raise RuntimeError(
        f"POWERSUM_KERNELS must be 'auto', 'py', or 'c', got {_choice!r}"
    )

BACKEND = "python" if _impl is pykernels else "compiled"

power_sum_naive = _impl.power_sum_naive
stirling_rows = _impl.stirling_rows
stirling_explicit_sum = _impl.stirling_explicit_sum
eval_samsonadze = _impl.eval_samsonadze
eval_binomial = _impl.eval_binomial
eval_stirling = _impl.eval_stirling
eval_companion = _impl.eval_companion
eval_factorized = _impl.eval_factorized
