"""Exponential integral E1(x) = int_x^oo e^-t / t dt for real x > 0."""

from __future__ import annotations

import numpy as np

EULER_GAMMA = 0.57721566490153286060651209008240243

# series for x <= SWITCH, continued fraction above
SWITCH = 1.0
_SERIES_TERMS = 30
_CF_MAX_ITER = 500
_CF_TOL = 1e-16
_TINY = 1e-300


def _e1_series(x: np.ndarray) -> np.ndarray:
    # E1(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k k!)
    total = np.zeros_like(x)
    term = np.ones_like(x)
    for k in range(1, _SERIES_TERMS + 1):
        term = term * (-x) / k
        total += term / k
    return -EULER_GAMMA - np.log(x) - total


def _e1_cf(x: np.ndarray) -> np.ndarray:
    # modified Lentz on e^-x * 1/(x+1- 1^2/(x+3- 2^2/(x+5- ...)))
    b = x + 1.0
    c = np.full_like(x, 1.0 / _TINY)
    d = 1.0 / b
    h = d.copy()
    active = np.ones(x.shape, dtype=bool)
    for i in range(1, _CF_MAX_ITER + 1):
        an = -float(i * i)
        b = b + 2.0
        d_new = 1.0 / (an * d + b)
        c_new = b + an / c
        delta = c_new * d_new
        d = np.where(active, d_new, d)
        c = np.where(active, c_new, c)
        h = np.where(active, h * delta, h)
        active &= np.abs(delta - 1.0) > _CF_TOL
        if not active.any():
            break
    return h * np.exp(-x)


def exp1(x):
    """E1 for real x > 0 (scalar or array), relative accuracy about 1e-15."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 0):
        raise ValueError("exp1 is only implemented for x > 0")
    flat = arr.reshape(-1)
    out = np.empty_like(flat)
    small = flat <= SWITCH
    if small.any():
        out[small] = _e1_series(flat[small])
    if (~small).any():
        out[~small] = _e1_cf(flat[~small])
    out = out.reshape(arr.shape)
    return float(out) if out.ndim == 0 else out
