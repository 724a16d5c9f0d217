"""Circle-method numerics: exponential sums, arc integrals, Fourier residuals.

Three finite exponential sums share one shape, sum of coeff * e(alpha * freq)
with integer frequencies:

  prime_exp_sum    over window primes, coefficient log p, frequency f(p);
  smooth_exp_sum   over the integer target grid, coefficient weight(m), frequency m;
  integer_exp_sum  over all integers in the window, coefficient 1, frequency f(n).

Because frequencies are integers, alpha*freq is reduced mod 1 before the
exponential; values at alpha and alpha+1 are then bit-identical, and the
full-circle uniform quadrature of the cubed prime sum reproduces the
representation count exactly once the grid beats 3*max(f).
"""
from __future__ import annotations

import cmath
import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .asymptotics import grid_weights
from .errors import GridTooCoarseWarning, InvalidParameter, Singular
from .seqeval import ValueTable, floor_value
from .window import WindowParams

_ALPHA_CHUNK = 2048


@dataclass(frozen=True)
class SumSample:
    alpha: float
    value: complex
    kind: str                 # "prime", "smooth" or "integer"
    window: WindowParams


def _exp_sum(coeff: np.ndarray, freq: np.ndarray, alpha: float) -> complex:
    # e(alpha*f) with the phase reduced mod 1 first; exact at integer alpha.
    phase = np.mod(alpha * freq.astype(np.float64), 1.0)
    z = np.exp(2j * np.pi * phase)
    return complex(np.sum(coeff * z))


def prime_exp_sum(values: ValueTable, logs: np.ndarray, alpha: float) -> complex:
    """Sum of log(p) * e(alpha * f(p)) over the table's primes."""
    return _exp_sum(np.asarray(logs, dtype=np.float64), values.f, alpha)


def smooth_exp_sum(w: WindowParams, alpha: float) -> complex:
    """Sum of weight(m) * e(alpha * m) over the integer target grid."""
    m, wt = grid_weights(w)
    return _exp_sum(wt, m, alpha)


@functools.lru_cache(maxsize=8)
def _integer_freqs(w: WindowParams) -> np.ndarray:
    lo = math.floor(w.delta1) + 1
    hi = math.floor(w.delta2)
    return np.array(
        [floor_value(n, w.c, w.theta).f for n in range(lo, hi + 1)],
        dtype=np.int64,
    )


def integer_exp_sum(w: WindowParams, alpha: float) -> complex:
    """Sum of e(alpha * f(n)) over every integer n in (delta1, delta2]."""
    freqs = _integer_freqs(w)
    return _exp_sum(np.ones(len(freqs)), freqs, alpha)


def sum_samples(
    kind: str,
    alphas,
    w: WindowParams,
    values: ValueTable | None = None,
    logs: np.ndarray | None = None,
) -> list[SumSample]:
    """Evaluate one of the three sums on a list of alphas, tagged samples out."""
    if kind == "prime":
        if values is None or logs is None:
            raise InvalidParameter("prime sums need the value table and log weights")
        fn = lambda a: prime_exp_sum(values, logs, a)
    elif kind == "smooth":
        fn = lambda a: smooth_exp_sum(w, a)
    elif kind == "integer":
        fn = lambda a: integer_exp_sum(w, a)
    else:
        raise InvalidParameter(f"unknown sum kind {kind!r}")
    return [SumSample(float(a), fn(float(a)), kind, w) for a in alphas]


def circle_integral(
    values: ValueTable,
    logs: np.ndarray,
    N: int,
    interval: tuple[float, float] = (0.0, 1.0),
    grid_size: int = 1024,
) -> complex:
    """Composite trapezoid of (prime sum)^3 * e(-N alpha) over the interval.

    On the full circle [0, 1] with grid_size above 3*max(f) the uniform sum
    is exact by discrete orthogonality and equals the weighted ternary
    count; a coarser full-circle grid draws a GridTooCoarseWarning. On
    partial intervals this is plain quadrature with ordinary grid error.
    """
    a, b = float(interval[0]), float(interval[1])
    if not (a < b):
        raise InvalidParameter(f"empty interval [{a}, {b}]")
    if b - a > 1.0 + 1e-12:
        raise InvalidParameter("interval longer than the full circle")
    M = int(grid_size)
    if M < 16:
        raise InvalidParameter(f"grid_size must be at least 16, got {M}")
    logs = np.asarray(logs, dtype=np.float64)
    f = values.f.astype(np.float64)
    f_max = int(values.f.max()) if len(values) else 0
    if b - a >= 1.0 - 1e-12 and M <= 3 * f_max:
        warnings.warn(
            f"full-circle grid {M} not above 3*f_max = {3 * f_max}; sum is not exact",
            GridTooCoarseWarning,
            stacklevel=2,
        )
    h = (b - a) / M
    total = 0.0 + 0.0j
    # alpha_j = a + j h, j = 0..M; endpoints carry the trapezoid 1/2.
    for start in range(0, M + 1, _ALPHA_CHUNK):
        stop = min(start + _ALPHA_CHUNK, M + 1)
        j = np.arange(start, stop, dtype=np.float64)
        alphas = a + j * h
        phases = np.mod(alphas[:, None] * f[None, :], 1.0)
        S = np.sum(np.exp(2j * np.pi * phases) * logs[None, :], axis=1)
        integrand = S ** 3 * np.exp(-2j * np.pi * np.mod(alphas * N, 1.0))
        coeff = np.ones(stop - start)
        if start == 0:
            coeff[0] = 0.5
        if stop == M + 1:
            coeff[-1] = 0.5
        total += complex(np.sum(integrand * coeff))
    return total * h


def fourier_coeff(x: float, h: int) -> complex:
    """Closed-form coefficient (1 - e(-x)) / (2 pi i (h + x))."""
    if abs(h + x) < 1e-12:
        raise Singular(f"coefficient denominator vanishes at h={h}, x={x}")
    # reduce the phase mod 1 so an integer x yields an exact zero numerator
    return (1.0 - cmath.exp(-2j * math.pi * (x % 1.0))) / (2j * math.pi * (h + x))


def fourier_expansion_residual(y_grid, x: float, H: int) -> dict:
    """Truncation residual of the finite expansion of e(-x {y}).

    Compares e(-x*frac(y)) against sum over |h| <= H of c_h(x) e(h y) on
    the given points and reports residual statistics next to the reference
    envelope min(1, 1/(H ||y||)), where ||y|| is the distance from y to
    the nearest integer.
    """
    if H < 3:
        raise InvalidParameter(f"H must be at least 3, got {H}")
    y = np.asarray(y_grid, dtype=np.float64)
    fy = np.mod(y, 1.0)
    lhs = np.exp(-2j * np.pi * x * fy)
    hs = np.arange(-H, H + 1)
    # integer x degenerates (every coefficient 0, one denominator 0); the
    # Singular raised by fourier_coeff is the documented behaviour there.
    cs = np.array([fourier_coeff(x, int(h)) for h in hs])
    rhs = np.sum(np.exp(2j * np.pi * np.mod(y[:, None] * hs[None, :], 1.0)) * cs[None, :], axis=1)
    resid = np.abs(lhs - rhs)
    norm = np.minimum(fy, 1.0 - fy)
    bound = np.minimum(1.0, 1.0 / (H * np.maximum(norm, 1e-300)))
    ratio = resid / bound
    return {
        "points": int(len(y)),
        "mean_residual": float(np.mean(resid)),
        "max_residual": float(np.max(resid)),
        "mean_ratio": float(np.mean(ratio)),
        "max_ratio": float(np.max(ratio)),
    }
