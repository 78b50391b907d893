"""Kernel selection: compiled extension when available, pure fallback otherwise.

Set ABERRANT_PURE=1 to force the pure-Python kernel.
"""

from __future__ import annotations

import os

if os.environ.get("ABERRANT_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

IMPL: str = _impl.IMPL
scan_columns = _impl.scan_columns


def available_impls():
    """Names of importable kernel implementations (for the benchmark)."""
    impls = {"pure"}
    try:
        from . import _speedups  # noqa: F401

        impls.add("compiled")
    except ImportError:
        pass
    return sorted(impls)
