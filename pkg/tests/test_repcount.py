"""Ternary counts: meet-in-the-middle vs the naive oracle, scans, binary
search, and the classical Piatetski-Shapiro style cross-check."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import quiet_window
from tanprimes import (
    count_classical,
    count_ternary_mitm,
    count_ternary_naive,
    find_binary,
    floor_value,
    scan_band,
    value_table,
)
from tanprimes.errors import (
    AmbiguousFloor,
    BandTooWide,
    InvalidParameter,
    TooLarge,
    WindowMismatch,
)
from tanprimes.repcount import _classical_floor, build_pair_map, scan_to_csv


def test_pair_map_total_mass(pairmap2, table2):
    assert int(pairmap2.counts.sum()) == len(table2) ** 2
    assert pairmap2.n_primes == len(table2)


def test_pair_map_bounds(pairmap2, table2):
    assert pairmap2.s_min == 2 * int(table2.f.min())
    assert pairmap2.s_max == 2 * int(table2.f.max())


def test_pair_map_spot_check(pairmap2, table2, block2):
    s = int(table2.f[0] + table2.f[7])
    cnt = 0
    terms = []
    for i in range(len(table2)):
        for j in range(len(table2)):
            if int(table2.f[i] + table2.f[j]) == s:
                cnt += 1
                terms.append(block2.logs[i] * block2.logs[j])
    c, wgt = pairmap2.lookup(s)
    assert c == cnt
    assert wgt == pytest.approx(math.fsum(terms), rel=1e-12)


def test_pair_map_lookup_outside(pairmap2):
    assert pairmap2.lookup(pairmap2.s_min - 1) == (0, 0.0)
    assert pairmap2.lookup(pairmap2.s_max + 1) == (0, 0.0)


@given(st.integers(min_value=0, max_value=3968))
@settings(max_examples=30, deadline=None)
def test_pair_map_random_sums(pairmap2, table2, i):
    # treat i as an index into the full pair grid and query its sum
    a, b = divmod(i, 63)
    s = int(table2.f[a] + table2.f[b])
    cnt, _ = pairmap2.lookup(s)
    brute = int(np.sum(np.add.outer(table2.f, table2.f) == s))
    assert cnt == brute


def test_mitm_equals_naive_sampled(table2, block2, pairmap2, w2):
    rng = np.random.default_rng(11)
    lo, hi = 3 * int(table2.f.min()), 3 * int(table2.f.max())
    targets = [w2.n_star, w2.n_star - 3, lo, hi] + [
        int(x) for x in rng.integers(lo, hi + 1, 6)
    ]
    for N in targets:
        a = count_ternary_mitm(table2, block2.logs, N, pair_map=pairmap2, w=w2)
        b = count_ternary_naive(table2, block2.logs, N)
        assert a.count == b.count
        if b.weighted:
            assert a.weighted == pytest.approx(b.weighted, rel=1e-12)
        assert a.method == "mitm" and b.method == "naive"


def test_single_prime_window(w0, table2):
    # k=0 window holds only the prime 3, f(3)=12, so N=36 has exactly the
    # one diagonal representation
    blk_logs = np.log(np.array([3.0]))
    t = value_table([3], w0.c, w0.theta)
    rep = count_ternary_mitm(t, blk_logs, 36)
    assert rep.count == 1
    assert rep.weighted == pytest.approx(math.log(3.0) ** 3, rel=1e-12)
    assert count_ternary_mitm(t, blk_logs, 35).count == 0
    assert count_ternary_naive(t, blk_logs, 37).count == 0


def test_ordered_multiplicity_structure(table2, block2, w2):
    # ordered counts decompose into 6/3/1 multiples by distinctness
    N = w2.n_star
    classes = {}
    f = table2.f
    for i in range(len(f)):
        for j in range(len(f)):
            fij = int(f[i] + f[j])
            if fij > N:
                continue
            for l in range(len(f)):
                if fij + int(f[l]) == N:
                    key = tuple(sorted((i, j, l)))
                    classes[key] = classes.get(key, 0) + 1
    total = 0
    for key, mult in classes.items():
        distinct = len(set(key))
        assert mult == {3: 6, 2: 3, 1: 1}[distinct]
        total += mult
    assert total == count_ternary_mitm(table2, block2.logs, N, w=w2).count


def test_zero_report_out_of_range(table2, block2):
    lo = 3 * int(table2.f.min())
    rep = count_ternary_mitm(table2, block2.logs, lo - 1)
    assert rep.count == 0 and rep.weighted == 0.0
    assert count_ternary_mitm(table2, block2.logs, 10**9).count == 0


def test_scan_matches_pointwise(table2, block2, pairmap2, w2):
    scan = scan_band(table2, block2.logs, w2.n_star - 5, w2.n_star + 5, pair_map=pairmap2, w=w2)
    assert [r.target for r in scan] == list(range(w2.n_star - 5, w2.n_star + 6))
    for row in scan:
        rep = count_ternary_mitm(table2, block2.logs, row.target, pair_map=pairmap2, w=w2)
        assert row.count == rep.count
        assert row.weighted == rep.weighted


def test_scan_concatenation(table2, block2, pairmap2):
    a, m, b = 9300, 9350, 9400
    whole = scan_band(table2, block2.logs, a, b, pair_map=pairmap2)
    left = scan_band(table2, block2.logs, a, m, pair_map=pairmap2)
    right = scan_band(table2, block2.logs, m + 1, b, pair_map=pairmap2)
    glued = left + right
    assert [r.count for r in whole] == [r.count for r in glued]
    assert [r.weighted for r in whole] == [r.weighted for r in glued]


def test_scan_rejections(table2, block2):
    with pytest.raises(InvalidParameter):
        scan_band(table2, block2.logs, 9400, 9300)
    with pytest.raises(BandTooWide):
        scan_band(table2, block2.logs, 0, 2 * 10**6)


def test_scan_csv_shape(table2, block2, tmp_path):
    scan = scan_band(table2, block2.logs, 9376, 9380)
    out = tmp_path / "scan.csv"
    with out.open("w") as fh:
        scan_to_csv(scan, fh)
    lines = out.read_text().splitlines()
    assert lines[0] == "N,count,weighted"
    assert len(lines) == 6
    assert lines[1].startswith("9376,")


def test_find_binary_frozen(table3, block3, w3):
    pair = find_binary(table3, block3.logs, w3.n_star)
    assert pair == (27893, 34877)
    fa = floor_value(27893, w3.c, w3.theta).f
    fb = floor_value(34877, w3.c, w3.theta).f
    assert fa + fb == w3.n_star


def test_find_binary_lexicographic(table2, block2, w2):
    N = w2.n_star
    brute = None
    for i in range(len(table2)):
        for j in range(len(table2)):
            if int(table2.f[i] + table2.f[j]) == N:
                brute = (int(table2.n[i]), int(table2.n[j]))
                break
        if brute:
            break
    assert find_binary(table2, block2.logs, N) == brute


def test_find_binary_none(table2, block2):
    assert find_binary(table2, block2.logs, 3) is None


def test_window_mismatch(table2, block2):
    with pytest.raises(WindowMismatch):
        build_pair_map(table2, block2.logs[:-1])
    with pytest.raises(WindowMismatch):
        count_ternary_mitm(table2, block2.logs[:-1], 9000)


def test_naive_guard():
    t = value_table([3], 1.05, 2.0)
    big = type(t)(
        n=np.arange(10001, dtype=np.int64),
        f=np.arange(10001, dtype=np.int64),
        frac=np.zeros(10001),
        certified=np.zeros(10001, dtype=bool),
    )
    with pytest.raises(TooLarge):
        count_ternary_naive(big, np.zeros(10001), 5)


def test_classical_small_oracle():
    c, N = 1.02, 60
    bmax = int(round(N ** (1.0 / c))) + 2
    ps = [p for p in range(2, bmax + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]
    fs = [(p, _classical_floor(p, c)) for p in ps]
    fs = [(p, f) for p, f in fs if f <= N]
    cnt = 0
    terms = []
    for p1, f1 in fs:
        for p2, f2 in fs:
            for p3, f3 in fs:
                if f1 + f2 + f3 == N:
                    cnt += 1
                    terms.append(math.log(p1) * math.log(p2) * math.log(p3))
    rep = count_classical(c, N)
    assert rep.count == cnt
    assert rep.weighted == pytest.approx(math.fsum(terms), rel=1e-12)


def test_classical_fixture_point():
    rep = count_classical(1.02, 2000)
    assert rep.count == 5811
    assert rep.weighted == pytest.approx(1126392.5637217, rel=1e-10)


def test_classical_edges():
    assert count_classical(1.02, 5).count == 0
    assert count_classical(1.02, 2).count == 0
    with pytest.raises(InvalidParameter):
        count_classical(1.0, 100)
    with pytest.raises(TooLarge):
        count_classical(1.02, 100001)


def test_classical_floor_two_tier():
    assert _classical_floor(2, 1.02) == math.floor(2**1.02)
    with pytest.raises(AmbiguousFloor):
        _classical_floor(3, 2.0)
