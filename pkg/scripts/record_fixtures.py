#!/usr/bin/env python3
"""Regenerate the frozen JSON fixtures under tests/fixtures/.

Run from the repository root:

    python scripts/record_fixtures.py

Outputs are deterministic, so a rerun on the same platform must reproduce
the committed files byte for byte. The band statistics recorded here are
desk-scale observations; see the test suite for how they are consumed.
"""

import json
import pathlib
import warnings

import numpy as np

from tanprimes import (
    count_classical,
    classical_main_term,
    sieve_segment,
    value_table,
    window_from_index,
)
from tanprimes.asymptotics import band_stats, compare_report
from tanprimes.circle import integer_exp_sum
from tanprimes.repcount import scan_band

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def quiet_window(k, c, theta, epsilon=0.05):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return window_from_index(k, c, theta, epsilon)


def integer_profile():
    w = quiet_window(2, 1.05, 2.0)
    alphas = -0.5 + np.arange(256) / 256.0
    prof = [round(abs(integer_exp_sum(w, float(a))), 10) for a in alphas]
    out = FIXTURES / "integer_sum_profile_k2.json"
    out.write_text(json.dumps(prof) + "\n")
    print("wrote", out)


def band_and_classical():
    rec = {}
    for k, c, theta in ((3, 1.02, 1.5), (4, 1.02, 1.5)):
        w = quiet_window(k, c, theta)
        blk = sieve_segment(w.delta1, w.delta2)
        vt = value_table(blk.primes, c, theta)
        scan = scan_band(vt, blk.logs, w.n_star - 100, w.n_star + 100, w=w)
        stats = band_stats(scan, compare_report(scan, w))
        rec["k%d" % k] = stats
        print("k=%d" % k, stats)

    rep = count_classical(1.02, 2000)
    mt = classical_main_term(1.02, 2000)
    rec["classical"] = {
        "c": 1.02,
        "target": 2000,
        "count": rep.count,
        "weighted": rep.weighted,
        "main_term": mt,
        "ratio": rep.weighted / mt,
    }
    out = FIXTURES / "desk_scale_band.json"
    out.write_text(json.dumps(rec, indent=1, sort_keys=True) + "\n")
    print("wrote", out)


if __name__ == "__main__":
    FIXTURES.mkdir(parents=True, exist_ok=True)
    integer_profile()
    band_and_classical()
