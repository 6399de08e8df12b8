"""Circle minimization and smallest-positive-root extraction on (0, 1)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_GRID = 4096
DEFAULT_THETA_TOL = 1e-10
DEFAULT_ROOT_TOL = 1e-12
DEFAULT_SCAN_STEP = 1.0 / 4096


class NumericalFailure(RuntimeError):
    """Base class for failures the CLI reports with exit code 2."""


class NoBracketError(NumericalFailure):
    """No sign change of the objective was found on the scanned interval."""

    def __init__(self, message, interval, values):
        super().__init__(
            f"{message}: scanned [{interval[0]:.6g}, {interval[1]:.6g}], "
            f"objective values {values[0]:.6g} .. {values[1]:.6g}"
        )
        self.interval = interval
        self.values = values


class CircleMinimum(NamedTuple):
    theta: float
    value: float


class Root(NamedTuple):
    root: float
    residual: float


def _golden(fn, a, b, tol):
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = fn(d)
    return (c, fc) if fc <= fd else (d, fd)


@lru_cache(maxsize=8)
def theta_grid(grid):
    """Uniform angles 2*pi*k/grid; the same read-only array is returned each time."""
    theta = TWO_PI * np.arange(grid) / grid
    theta.setflags(write=False)
    return theta


@lru_cache(maxsize=8)
def _unit_points(grid):
    w = np.exp(1j * theta_grid(grid))
    w.setflags(write=False)
    return w


def cis(theta):
    """exp(i*theta); cached for the arrays handed out by :func:`theta_grid`."""
    if isinstance(theta, np.ndarray) and theta.size >= 512 and theta is theta_grid(theta.size):
        return _unit_points(theta.size)
    return np.exp(1j * theta)


def minimize_on_circle(fn: Callable, grid: int = DEFAULT_GRID, tol: float = DEFAULT_THETA_TOL) -> CircleMinimum:
    """Global minimum of a continuous 2π-periodic function.

    ``fn`` must accept a numpy array of angles as well as a scalar angle.  A
    uniform scan locates the best grid cell (ties go to the smallest angle),
    then golden-section search refines inside the two neighbouring cells.  The refined point is kept only
    if it is strictly better than the best grid value.
    """
    if grid < 512:
        raise ValueError("grid must be at least 512")
    theta = theta_grid(grid)
    values = np.asarray(fn(theta), dtype=float)
    k = int(np.argmin(values))
    best_theta, best_value = float(theta[k]), float(values[k])

    h = TWO_PI / grid

    t, v = _golden(lambda t: float(fn(t)), best_theta - h, best_theta + h, tol)
    if v < best_value:
        return CircleMinimum(t % TWO_PI, v)
    return CircleMinimum(best_theta, best_value)


@dataclass(frozen=True)
class RootQuery:
    """A smallest-positive-root problem on (0, search_max].

    ``objective`` takes a float, or a numpy array when ``vectorized`` is set.
    """

    objective: Callable
    search_max: float = 1.0 - 1e-9
    scan_step: float = DEFAULT_SCAN_STEP
    tol: float = DEFAULT_ROOT_TOL
    vectorized: bool = False
    label: str = "objective"

    def __post_init__(self):
        if not 0.0 < self.scan_step <= 1e-3:
            raise ValueError("scan_step must lie in (0, 1e-3]")
        if not 0.0 < self.tol <= 1e-10:
            raise ValueError("tol must lie in (0, 1e-10]")
        if not 0.0 < self.search_max <= 1.0 - 1e-9:
            raise ValueError("search_max must lie in (0, 1 - 1e-9]")

    def __call__(self, r):
        if self.vectorized:
            return float(np.asarray(self.objective(np.array([r], dtype=float)))[0])
        return float(self.objective(r))

    def values(self, rs):
        if self.vectorized:
            return np.asarray(self.objective(rs), dtype=float)
        return np.array([float(self.objective(float(r))) for r in rs])


def _value_at_zero(q):
    with np.errstate(all="ignore"):
        try:
            v = q(0.0)
        except (ZeroDivisionError, ValueError, FloatingPointError):
            return None
    return v if math.isfinite(v) else None


def bisect(fn, lo, hi, f_lo, tol):
    """Bisection on a bracket [lo, hi] with ``fn(lo)`` of sign ``f_lo``."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def smallest_positive_root(q: RootQuery) -> Root:
    """First sign change of ``q.objective`` on the scan grid, refined by bisection.

    Scanning starts at ``scan_step``.  When the objective is finite at 0 it is
    also used as the left end of the first cell, so roots below one scan step
    (parameter limits such as beta -> 1) are still bracketed.  An objective
    that vanishes exactly at 0 yields the degenerate root 0.
    """
    f0 = _value_at_zero(q)
    if f0 == 0.0:
        return Root(0.0, 0.0)

    n_steps = int(math.floor(q.search_max / q.scan_step))
    grid = q.scan_step * np.arange(1, n_steps + 1)
    if grid[-1] < q.search_max:
        grid = np.append(grid, q.search_max)

    prev_r, prev_f = (0.0, f0) if f0 is not None else (None, None)
    chunk = 4096 if q.vectorized else 1
    first_f = f0
    for start in range(0, grid.size, chunk):
        rs = grid[start : start + chunk]
        fs = q.values(rs)
        if first_f is None:
            first_f = fs[0]
        for r, f in zip(rs, fs):
            if not math.isfinite(f):
                raise NoBracketError(f"{q.label} not finite at r={r:.6g}", (0.0, float(r)), (first_f or math.nan, f))
            if f == 0.0:
                return Root(float(r), 0.0)
            if prev_f is not None and (f > 0) != (prev_f > 0):
                root = bisect(q, prev_r, float(r), prev_f, q.tol)
                return Root(root, abs(q(root)))
            prev_r, prev_f = float(r), float(f)
    raise NoBracketError(f"no sign change of {q.label}", (float(grid[0]), float(grid[-1])), (float(first_f), float(prev_f)))
