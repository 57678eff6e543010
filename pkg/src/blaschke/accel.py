"""Optional numba acceleration for the hot kernels.

All inner-loop code is written as scalar float arithmetic and decorated with
:func:`maybe_njit`.  Setting ``BLASCHKE_NO_NUMBA=1`` in the environment skips
jitting, so the identical source runs as plain Python on numpy scalars.  The
two paths produce bit-identical results (no fastmath, no reassociation); the
benchmark in ``benchmarks/bench_kernels.py`` checks that and measures the gap.
"""

import os
import warnings

NUMBA_ENABLED = os.environ.get("BLASCHKE_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if NUMBA_ENABLED:
    import numba
    from numba import prange

    # stale-TBB advisory from the runtime environment, not actionable here
    warnings.filterwarnings("ignore", message=".*TBB threading layer.*",
                            category=numba.NumbaWarning)

    def maybe_njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        if args and callable(args[0]):
            return numba.njit(args[0], **kwargs)

        def wrap(func):
            return numba.njit(func, **kwargs)

        return wrap

else:
    prange = range

    def maybe_njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


def set_workers(n):
    """Pin the numba thread count; ignored on the fallback path."""
    if NUMBA_ENABLED and n:
        import numba

        numba.set_num_threads(int(n))


def get_workers():
    if NUMBA_ENABLED:
        import numba

        return numba.get_num_threads()
    return 1
