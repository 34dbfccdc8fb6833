"""Search-kernel selection.

The hot exhaustive searches live in a small compiled extension
(``_speedups``, Cython) with a pure-Python twin (``_pure``).  The
compiled backend is used when importable; set ``LCC_PURE_PYTHON=1`` to
force the fallback (the benchmark suite compares the two).
"""

import os

from . import _pure

if os.environ.get("LCC_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
lcc_search = _impl.lcc_search
staircase_search = _impl.staircase_search

# The pure implementations stay importable under stable names for
# parity tests and benchmarks.
pure_lcc_search = _pure.lcc_search
pure_staircase_search = _pure.staircase_search
