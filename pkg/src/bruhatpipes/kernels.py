"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; ``BRUHATPIPES_PURE=1`` forces
the pure-Python twin.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("BRUHATPIPES_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
increasing_chain_ends = _impl.increasing_chain_ends
pd_cross_sets = _impl.pd_cross_sets
bpd_grids = _impl.bpd_grids


def available_backends() -> dict:
    out = {"python": _pykernels}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    return out
