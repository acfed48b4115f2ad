"""Kernel backend selection.

The compiled kernels cover graphs of at most 64 vertices; anything
larger (and any build without the extension) runs on the pure-Python
twins.  ``SPARING_FORCE_PYTHON_KERNELS=1`` in the environment disables
the extension, which the benchmark and the parity tests use.
"""

from __future__ import annotations

import os

from sparing import _kernels_py

try:
    from sparing import _ckernels
except ImportError:  # pragma: no cover - depends on build environment
    _ckernels = None

if os.environ.get("SPARING_FORCE_PYTHON_KERNELS") == "1":
    _ckernels = None

HAVE_COMPILED = _ckernels is not None
BACKEND = "compiled" if HAVE_COMPILED else "python"

lex_less = _kernels_py.lex_less


def mwis_brute(adj: list[int], weights: list[int]) -> tuple[int, int, int]:
    if HAVE_COMPILED and len(adj) <= 64:
        return _ckernels.mwis_brute(adj, weights)
    return _kernels_py.mwis_brute(adj, weights)


def mwis_bb(
    adj: list[int], weights: list[int], node_limit: int = 0
) -> tuple[int, int, int, bool]:
    if HAVE_COMPILED and len(adj) <= 64:
        return _ckernels.mwis_bb(adj, weights, node_limit)
    return _kernels_py.mwis_bb(adj, weights, node_limit)
