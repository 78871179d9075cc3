"""Hot numeric kernels, JIT-compiled when numba is available.

Two loops dominate runtime: the preferential-attachment allocation (one
draw per step, inherently sequential) and the profiled no-intercept
regression evaluated once per golden-section probe. Each kernel has a
plain numpy implementation; ``RANKLAWS_NUMBA=0`` (or ``false``/``off``/
``no``) forces the fallback, otherwise the JIT path is used whenever
numba imports. Both Simon paths run identical integer logic on the same
pre-drawn uniforms and return bit-identical arrays; the regression paths
differ only in float summation order (sub-ulp per term).

Both implementations of each kernel stay importable so benchmarks can
time them side by side.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _env_wants_numba() -> bool:
    flag = os.environ.get("RANKLAWS_NUMBA", "1").strip().lower()
    return flag not in ("0", "false", "off", "no")


NUMBA_ENABLED = False
if _env_wants_numba():
    try:
        from numba import njit
    except ImportError:
        pass
    else:
        NUMBA_ENABLED = True


def simon_owners_numpy(u_new: np.ndarray, u_pick: np.ndarray, p_new: float) -> np.ndarray:
    """Allocate steps to sources; owners[t] is the 0-based source of item t.

    Item 0 always belongs to source 0. For step t >= 1: if u_new[t-1] <
    p_new a fresh source is created, otherwise the item goes to the owner
    of a uniformly chosen past item, which realizes selection proportional
    to current counts.
    """
    steps = u_new.shape[0] + 1
    owners = np.zeros(steps, dtype=np.int64)
    is_new = u_new < p_new
    new_ids = np.cumsum(is_new)
    # int(u*t) with u just below 1.0 can round up to t; clamp to t-1.
    picks = np.minimum((u_pick * np.arange(1, steps)).astype(np.int64), np.arange(steps - 1))
    for t in range(1, steps):
        owners[t] = new_ids[t - 1] if is_new[t - 1] else owners[picks[t - 1]]
    return owners


def _simon_owners_loop(u_new: np.ndarray, u_pick: np.ndarray, p_new: float) -> np.ndarray:
    steps = u_new.shape[0] + 1
    owners = np.zeros(steps, dtype=np.int64)
    n_new = 0
    for t in range(1, steps):
        if u_new[t - 1] < p_new:
            n_new += 1
            owners[t] = n_new
        else:
            j = int(u_pick[t - 1] * t)
            if j > t - 1:
                j = t - 1
            owners[t] = owners[j]
    return owners


def mandelbrot_profile_numpy(log_values: np.ndarray, rho: float) -> tuple[float, float]:
    """Best no-intercept slope and its SSE for the shifted-rank regressor.

    Regresses log_values on x_r = log(n+rho) - log(r+rho) without an
    intercept and returns (slope, sse). A flat regressor (only possible
    at n = 1) gets slope 0 and the raw sum of squares.
    """
    n = log_values.shape[0]
    x = math.log(n + rho) - np.log(np.arange(1.0, n + 1.0) + rho)
    sxx = float(np.dot(x, x))
    if sxx == 0.0:
        return 0.0, float(np.dot(log_values, log_values))
    slope = float(np.dot(x, log_values)) / sxx
    resid = log_values - slope * x
    return slope, float(np.dot(resid, resid))


def _mandelbrot_profile_loop(log_values: np.ndarray, rho: float) -> tuple[float, float]:
    n = log_values.shape[0]
    top = math.log(n + rho)
    sxx = 0.0
    sxy = 0.0
    for r in range(1, n + 1):
        x = top - math.log(r + rho)
        sxx += x * x
        sxy += x * log_values[r - 1]
    if sxx == 0.0:
        sse = 0.0
        for i in range(n):
            sse += log_values[i] * log_values[i]
        return 0.0, sse
    slope = sxy / sxx
    sse = 0.0
    for r in range(1, n + 1):
        d = log_values[r - 1] - slope * (top - math.log(r + rho))
        sse += d * d
    return slope, sse


if NUMBA_ENABLED:
    simon_owners_jit = njit(cache=True)(_simon_owners_loop)
    mandelbrot_profile_jit = njit(cache=True)(_mandelbrot_profile_loop)
    simon_owners = simon_owners_jit
    mandelbrot_profile = mandelbrot_profile_jit
else:
    simon_owners_jit = None
    mandelbrot_profile_jit = None
    simon_owners = simon_owners_numpy
    mandelbrot_profile = mandelbrot_profile_numpy
