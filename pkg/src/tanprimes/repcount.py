"""Ternary and binary representation counts of targets by window primes.

The workhorse is meet-in-the-middle: tabulate the multiset of ordered
pair sums f(p_i)+f(p_j) once (dense count and weight arrays), then each
target N costs one pass over p_3. A literal triple loop serves as the
independent oracle. Ordered triples are counted, diagonals included.

Weighted sums are accumulated with math.fsum (correctly rounded), so
results are bit-identical across runs and thread counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import mpmath as mp
import numpy as np

from .errors import AmbiguousFloor, BandTooWide, InvalidParameter, TooLarge, WindowMismatch
from .primesieve import sieve_segment
from .seqeval import AMBIGUOUS_ABS, GUARD_ABS, _ESCALATED_PREC, ValueTable
from .window import WindowParams

_NAIVE_GUARD = 10 ** 4
_CLASSICAL_GUARD = 10 ** 5
_PAIR_SPAN_GUARD = 1 << 26   # dense pair arrays beyond this would eat memory
_BAND_GUARD = 10 ** 6
_BLOCK = 512                 # fixed pair-map block size, independent of threads


@dataclass(frozen=True)
class RepReport:
    target: int
    count: int
    weighted: float
    method: str                       # "mitm" or "naive"
    window: Optional[WindowParams] = None


@dataclass(frozen=True)
class PairMap:
    """Dense ordered-pair-sum tables: counts[s - s_min], weights[s - s_min]."""

    s_min: int
    counts: np.ndarray   # int64
    weights: np.ndarray  # float64, sum of log p_i log p_j per pair sum
    n_primes: int

    @property
    def s_max(self) -> int:
        return self.s_min + len(self.counts) - 1

    def lookup(self, s: int) -> tuple[int, float]:
        if s < self.s_min or s > self.s_max:
            return 0, 0.0
        return int(self.counts[s - self.s_min]), float(self.weights[s - self.s_min])


def _check_lengths(values: ValueTable, logs: np.ndarray) -> None:
    if len(values) != len(logs):
        raise WindowMismatch(
            f"value table has {len(values)} rows but {len(logs)} log weights"
        )


def _pair_map_from_arrays(f: np.ndarray, logs: np.ndarray) -> PairMap:
    n = len(f)
    if n == 0:
        return PairMap(0, np.zeros(1, dtype=np.int64), np.zeros(1), 0)
    fmin = int(f.min())
    fmax = int(f.max())
    span = 2 * (fmax - fmin) + 1
    if span > _PAIR_SPAN_GUARD:
        raise TooLarge(f"pair-sum span {span} exceeds the dense-array guard")
    rel = (f - fmin).astype(np.int64)
    counts = np.zeros(span, dtype=np.int64)
    weights = np.zeros(span, dtype=np.float64)
    for i in range(0, n, _BLOCK):
        sums = (rel[i:i + _BLOCK, None] + rel[None, :]).ravel()
        wts = (logs[i:i + _BLOCK, None] * logs[None, :]).ravel()
        counts += np.bincount(sums, minlength=span)
        weights += np.bincount(sums, weights=wts, minlength=span)
    return PairMap(2 * fmin, counts, weights, n)


def build_pair_map(values: ValueTable, logs: np.ndarray) -> PairMap:
    _check_lengths(values, logs)
    return _pair_map_from_arrays(values.f, np.asarray(logs, dtype=np.float64))


def _mitm_one(f: np.ndarray, logs: np.ndarray, pm: PairMap, N: int) -> tuple[int, float]:
    s = N - f
    ok = (s >= pm.s_min) & (s <= pm.s_max)
    if not ok.any():
        return 0, 0.0
    idx = (s[ok] - pm.s_min).astype(np.int64)
    r = int(pm.counts[idx].sum())
    gamma = math.fsum(logs[ok] * pm.weights[idx])
    return r, gamma


def count_ternary_mitm(
    values: ValueTable,
    logs: np.ndarray,
    N: int,
    pair_map: Optional[PairMap] = None,
    w: Optional[WindowParams] = None,
) -> RepReport:
    """Weighted and unweighted ordered-triple counts for one target."""
    _check_lengths(values, logs)
    logs = np.asarray(logs, dtype=np.float64)
    if len(values) == 0:
        return RepReport(int(N), 0, 0.0, "mitm", w)
    fmin, fmax = int(values.f.min()), int(values.f.max())
    if N < 3 * fmin or N > 3 * fmax:
        return RepReport(int(N), 0, 0.0, "mitm", w)
    pm = pair_map if pair_map is not None else _pair_map_from_arrays(values.f, logs)
    r, gamma = _mitm_one(values.f, logs, pm, int(N))
    return RepReport(int(N), r, gamma, "mitm", w)


def count_ternary_naive(
    values: ValueTable,
    logs: np.ndarray,
    N: int,
    w: Optional[WindowParams] = None,
) -> RepReport:
    """Independent oracle: literal triple loop, no pair tables."""
    _check_lengths(values, logs)
    n = len(values)
    if n > _NAIVE_GUARD:
        raise TooLarge(f"naive loop over {n} primes refused (guard {_NAIVE_GUARD})")
    f = [int(v) for v in values.f]
    lg = [float(v) for v in logs]
    r = 0
    terms = []
    for i in range(n):
        for j in range(n):
            fij = f[i] + f[j]
            if fij > N:
                continue
            wij = lg[i] * lg[j]
            for l in range(n):
                if fij + f[l] == N:
                    r += 1
                    terms.append(wij * lg[l])
    return RepReport(int(N), r, math.fsum(terms), "naive", w)


def scan_band(
    values: ValueTable,
    logs: np.ndarray,
    N_lo: int,
    N_hi: int,
    pair_map: Optional[PairMap] = None,
    w: Optional[WindowParams] = None,
) -> list[RepReport]:
    """count_ternary_mitm for every N in [N_lo, N_hi], one pair-map build."""
    _check_lengths(values, logs)
    if N_lo > N_hi:
        raise InvalidParameter(f"band bounds inverted: {N_lo} > {N_hi}")
    if N_hi - N_lo + 1 > _BAND_GUARD:
        raise BandTooWide(f"band width {N_hi - N_lo + 1} exceeds {_BAND_GUARD}")
    logs = np.asarray(logs, dtype=np.float64)
    if len(values) == 0:
        return [RepReport(int(N), 0, 0.0, "mitm", w) for N in range(N_lo, N_hi + 1)]
    pm = pair_map if pair_map is not None else _pair_map_from_arrays(values.f, logs)
    fmin, fmax = int(values.f.min()), int(values.f.max())
    out = []
    for N in range(int(N_lo), int(N_hi) + 1):
        if N < 3 * fmin or N > 3 * fmax:
            out.append(RepReport(N, 0, 0.0, "mitm", w))
        else:
            r, gamma = _mitm_one(values.f, logs, pm, N)
            out.append(RepReport(N, r, gamma, "mitm", w))
    return out


def find_binary(
    values: ValueTable,
    logs: np.ndarray,
    N: int,
) -> Optional[tuple[int, int]]:
    """Lexicographically smallest ordered pair (p1, p2) with f(p1)+f(p2) = N."""
    _check_lengths(values, logs)
    f = values.f
    n = len(f)
    if n == 0:
        return None
    fmin = int(f[0])
    for i in range(n):
        need = N - int(f[i])
        if need < fmin:
            break  # f ascending, need only shrinks from here
        j = int(np.searchsorted(f, need, side="left"))
        if j < n and int(f[j]) == need:
            return int(values.n[i]), int(values.n[j])
    return None


def _classical_floor(p: int, c: float) -> int:
    # Same two-tier scheme as seqeval, for the plain power p^c.
    v = p ** c
    fl = math.floor(v)
    if min(v - fl, 1.0 - (v - fl)) < GUARD_ABS:
        with mp.workprec(_ESCALATED_PREC):
            mv = mp.mpf(p) ** c
            if abs(mv - mp.nint(mv)) < AMBIGUOUS_ABS:
                raise AmbiguousFloor(f"p^c within 2^-40 of an integer at p={p}")
            fl = int(mp.floor(mv))
    return fl


def count_classical(c: float, N: int) -> RepReport:
    """Ordered-triple count for N = [p1^c]+[p2^c]+[p3^c], primes 2..N^(1/c)."""
    if c <= 1.0:
        raise InvalidParameter(f"classical variant needs c > 1, got {c}")
    if N > _CLASSICAL_GUARD:
        raise TooLarge(f"N={N} exceeds the classical guard {_CLASSICAL_GUARD}")
    if N < 6:
        return RepReport(int(N), 0, 0.0, "mitm", None)
    bmax = int(N ** (1.0 / c)) + 2  # slack is harmless: extra primes never match
    block = sieve_segment(1, bmax)
    f = np.array([_classical_floor(int(p), c) for p in block.primes], dtype=np.int64)
    keep = f <= N
    f = f[keep]
    logs = block.logs[keep]
    if len(f) == 0:
        return RepReport(int(N), 0, 0.0, "mitm", None)
    pm = _pair_map_from_arrays(f, logs)
    r, gamma = _mitm_one(f, logs, pm, int(N))
    return RepReport(int(N), r, gamma, "mitm", None)


def scan_to_csv(reports: list[RepReport], fh) -> None:
    fh.write("N,count,weighted\n")
    for rep in reports:
        fh.write(f"{rep.target},{rep.count},{rep.weighted:.12g}\n")
