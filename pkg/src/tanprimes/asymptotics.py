"""Main terms, exact smooth convolutions, and observed-vs-predicted reports.

The predicted density for targets near the top of a window is
delta2^(1-c) * X^2 / (2^theta c + 5 theta 2^(theta-1)) with X = delta2;
the denominator is the forward-map derivative factor at tan = 2, so the
whole expression equals weight(t(delta2)) * X^2. How well that predicts
the observed weighted counts at desk scale is recorded, not assumed; see
the psi_k ratio fixtures.
"""
from __future__ import annotations

import functools
import math
import statistics
from dataclasses import dataclass

import numpy as np

from .errors import BandTooWide, InvalidParameter
from .repcount import RepReport
from .window import WindowParams, weight

_GRID_GUARD = 10 ** 7

# Standard Lanczos coefficients, g = 7, 9 terms. Relative error below
# 1e-13 on the arguments used here (all in (0.5, 4]).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class CompareRow:
    target: int
    observed: float      # weighted count from repcount
    main_term: float
    ratio: float
    window: WindowParams


def main_term(w: WindowParams) -> float:
    """Predicted weighted count: delta2^(1-c) X^2 / (2^theta c + 5 theta 2^(theta-1))."""
    denom = 2.0 ** w.theta * w.c + 5.0 * w.theta * 2.0 ** (w.theta - 1.0)
    return w.delta2 ** (1.0 - w.c) * w.x * w.x / denom


def _lanczos_gamma(x: float) -> float:
    if x <= 0.5:
        raise InvalidParameter(f"gamma approximation implemented for x > 1/2, got {x}")
    a = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        a += _LANCZOS_COEF[i] / (x - 1.0 + i)
    t = x + _LANCZOS_G - 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x - 0.5) * math.exp(-t) * a


def classical_main_term(c: float, N: int) -> float:
    """Predicted weighted count for the plain power variant [p^c].

    gamma(1+1/c)^3 / gamma(3/c) * N^(3/c - 1), with the gamma function
    evaluated by the recorded Lanczos coefficients. c = 1 is allowed as a
    numerical boundary (value N^2/2 exactly in the limit).
    """
    if c < 1.0:
        raise InvalidParameter(f"need c >= 1, got {c}")
    g1 = _lanczos_gamma(1.0 + 1.0 / c)
    g3 = _lanczos_gamma(3.0 / c)
    return g1 ** 3 / g3 * float(N) ** (3.0 / c - 1.0)


@functools.lru_cache(maxsize=8)
def grid_weights(w: WindowParams) -> tuple[np.ndarray, np.ndarray]:
    """Integer target grid (n1, n_star] with smooth weights. Treat as read-only."""
    m_lo = math.floor(w.n1) + 1
    size = w.n_star - m_lo + 1
    if size <= 0:
        raise InvalidParameter(f"empty target grid for window k={w.k}")
    if size > _GRID_GUARD:
        raise BandTooWide(f"target grid has {size} points, guard is {_GRID_GUARD}")
    m = np.arange(m_lo, w.n_star + 1, dtype=np.int64)
    wt = weight(m.astype(np.float64), w)
    return m, wt


def weight_convolution(w: WindowParams, N: int, k: int) -> float:
    """Exact k-fold convolution of the smooth weights at target N.

    Sum over m_1 + ... + m_k = N with every m_i in the integer grid
    (n1, n_star] of the product of weights. k = 1 reduces to weight(N)
    (identical call, so the value is bit-exact), k = 2 uses a correctly
    rounded sum and is exactly symmetric under grid reversal. k = 3 costs
    O(grid^2) multiplies; fine at desk scale, slow near the guard.
    """
    if k not in (1, 2, 3):
        raise InvalidParameter(f"k must be 1, 2 or 3, got {k}")
    N = int(N)
    m, wt = grid_weights(w)
    m_lo = int(m[0])
    m_hi = int(m[-1])

    if k == 1:
        if m_lo <= N <= m_hi:
            return weight(float(N), w)
        return 0.0

    if k == 2:
        a = max(m_lo, N - m_hi)
        b = min(m_hi, N - m_lo)
        if a > b:
            return 0.0
        left = wt[a - m_lo: b - m_lo + 1]
        right = wt[N - b - m_lo: N - a - m_lo + 1][::-1]
        return math.fsum(left * right)

    # k == 3: partial pair convolutions contracted against the third factor.
    s_lo = max(2 * m_lo, N - m_hi)
    s_hi = min(2 * m_hi, N - m_lo)
    if s_lo > s_hi:
        return 0.0
    terms = []
    for s in range(s_lo, s_hi + 1):
        a = max(m_lo, s - m_hi)
        b = min(m_hi, s - m_lo)
        if a > b:
            continue
        left = wt[a - m_lo: b - m_lo + 1]
        right = wt[s - b - m_lo: s - a - m_lo + 1][::-1]
        terms.append(float(np.sum(left * right)) * wt[N - s - m_lo])
    return math.fsum(terms)


def compare_report(scan: list[RepReport], w: WindowParams) -> list[CompareRow]:
    """Observed weighted counts against the window main term, one row per N."""
    if not scan:
        raise InvalidParameter("compare_report needs a nonempty scan")
    mt = main_term(w)
    rows = []
    for rep in scan:
        ratio = rep.weighted / mt if mt > 0 else 0.0
        rows.append(CompareRow(rep.target, rep.weighted, mt, ratio, w))
    return rows


def band_stats(scan: list[RepReport], rows: list[CompareRow]) -> dict:
    """Band summary: positivity rate plus mean/median observed-to-predicted ratio."""
    ratios = [r.ratio for r in rows]
    return {
        "n": len(rows),
        "positive_rate": sum(1 for rep in scan if rep.count > 0) / len(scan),
        "mean_ratio": statistics.mean(ratios),
        "median_ratio": statistics.median(ratios),
    }


def compare_to_csv(scan: list[RepReport], rows: list[CompareRow], fh) -> None:
    fh.write("N,count,weighted,main_term,ratio\n")
    for rep, row in zip(scan, rows):
        fh.write(
            f"{row.target},{rep.count},{row.observed:.12g},"
            f"{row.main_term:.12g},{row.ratio:.12g}\n"
        )
