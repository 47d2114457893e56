"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
reference.  Set DETOURS_PURE=1 to force the fallback.  Both backends expose
the same functions with identical traversal order and node accounting, so
results (including witnesses and node counts) match exactly; the benchmark
suite and the equivalence tests rely on that.
"""

from __future__ import annotations

import os

from . import _kernels_py

MODE_MAX = _kernels_py.MODE_MAX
MODE_ATLEAST = _kernels_py.MODE_ATLEAST
MODE_EXACT = _kernels_py.MODE_EXACT

_compiled = None
if not os.environ.get("DETOURS_PURE"):
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_active = _compiled if _compiled is not None else _kernels_py


def backend_name() -> str:
    return _active.BACKEND_NAME


def available_backends() -> list[str]:
    names = ["pure"]
    if _compiled is not None:
        names.append("compiled")
    return names


def get_backend(name: str):
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise ValueError("compiled backend is not available")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


longest_path = _active.longest_path
longest_path_from_to = _active.longest_path_from_to
exact_path = _active.exact_path
feasible_lengths = _active.feasible_lengths
bnb_path = _active.bnb_path
chain_path = _active.chain_path
color_coding = _active.color_coding
xorshift_stream = _kernels_py.xorshift_stream
