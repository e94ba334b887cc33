"""Kernel selection: the compiled extension when present, else pure Python.

Set PULLCALC_PURE=1 in the environment to force the pure fallback (the
benchmark and the parity tests both do).  Import either way; the public
interfaces never change shape.
"""

from __future__ import annotations

import os

if os.environ.get("PULLCALC_PURE"):
    from pullcalc import _purekernel as _impl
else:
    try:
        from pullcalc import _speedups as _impl  # type: ignore
    except ImportError:
        from pullcalc import _purekernel as _impl

USING_COMPILED = _impl.__name__.endswith("_speedups")

fold_turns = _impl.fold_turns
reduce_turns = _impl.reduce_turns
brute_max_total = _impl.brute_max_total
