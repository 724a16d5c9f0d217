"""Exact rational bookkeeping for the admissibility threshold."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanprimes.exponents import (
    PRIOR_BOUNDS,
    LinearExponent,
    admissible_c,
    chain_table,
    cutoffs,
    derivation_chain,
    gk_exponent,
    minor_arc_exponent,
)
from tanprimes.errors import InvalidParameter


def test_admissible_threshold_exact():
    assert admissible_c() == F(23, 21)
    assert isinstance(admissible_c(), F)


def test_minor_arc_examples():
    assert minor_arc_exponent(F(1)) == F(14, 15)
    assert minor_arc_exponent(F(23, 21)) == F(20, 21)
    assert minor_arc_exponent(F(11, 10)) == F(143, 150)


def test_minor_arc_rejects_outside():
    with pytest.raises(InvalidParameter):
        minor_arc_exponent(F(2))
    with pytest.raises(InvalidParameter):
        minor_arc_exponent(F(1, 2))


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=40))
@settings(max_examples=100, deadline=None)
def test_minor_arc_monotone(num, den):
    # larger c costs more on the minor arcs
    c = F(1) + F(num, 201 * den)
    d = c + F(1, 1000)
    if d < 2:
        assert minor_arc_exponent(c) < minor_arc_exponent(d)
        assert isinstance(minor_arc_exponent(c), F)


def test_cutoffs_examples():
    assert cutoffs(F(1)) == (F(1, 15), F(1, 3))
    assert cutoffs(F(23, 21)) == (F(1, 21), F(19, 63))
    lo, hi = cutoffs(F(102, 100))
    assert 0 < lo < hi < 1
    with pytest.raises(InvalidParameter):
        cutoffs(F(3, 2))


def test_gk_examples():
    # k=1: Q=2, 4Q-2=6: max(f/6 + 1 - 3/6, 1 - f)
    assert gk_exponent(1, F(1)) == F(2, 3)
    assert gk_exponent(2, F(1)) == F(11, 14)
    assert gk_exponent(3, F(0)) == F(1)
    # second branch dominates for small amplitude
    assert gk_exponent(1, F(1, 10)) == F(9, 10)
    with pytest.raises(InvalidParameter):
        gk_exponent(9, F(1))
    with pytest.raises(InvalidParameter):
        gk_exponent(-1, F(1))


def test_linear_exponent_algebra():
    a = LinearExponent(F(1), F(-1))
    b = LinearExponent(F(11, 15), F(1, 5))
    s = a + b
    assert s.a == F(26, 15) and s.b == F(-4, 5)
    assert s.at(F(23, 21)) == F(26, 15) - F(4, 5) * F(23, 21)
    assert a.scaled(F(2)).at(F(3)) == 2 * a.at(F(3))
    assert "c" in str(b)


def test_derivation_chain_structure():
    steps = derivation_chain()
    names = [name for name, _, _ in steps]
    assert names == [
        "minor_arc_sup",
        "mean_square",
        "arc_count",
        "correlation",
        "tail_squared",
        "tail",
        "error_budget",
    ]
    by = {name: expr for name, expr, _ in steps}
    assert (by["correlation"].a, by["correlation"].b) == (F(37, 15), F(-3, 5))
    assert (by["tail_squared"].a, by["tail_squared"].b) == (F(67, 15), F(-3, 5))
    assert (by["error_budget"].a, by["error_budget"].b) == (F(3), F(-1))


def test_chain_solves_to_threshold():
    # tail < budget exactly when c < 23/21; equality at the boundary
    by = {name: expr for name, expr, _ in derivation_chain()}
    tail, budget = by["tail"], by["error_budget"]
    cstar = admissible_c()
    assert tail.at(cstar) == budget.at(cstar)
    assert tail.at(cstar - F(1, 1000)) < budget.at(cstar - F(1, 1000))
    assert tail.at(cstar + F(1, 1000)) > budget.at(cstar + F(1, 1000))


def test_chain_table_rows():
    rows = chain_table()
    assert rows[-1]["step"] == "admissible_c"
    assert rows[-1]["at_boundary"] == "23/21"
    for row in rows:
        assert set(row) == {"step", "exponent", "at_boundary", "note"}


def test_prior_bounds_ordering_computed():
    # listing order is chronological, not sorted; compute the true order
    bounds = sorted(PRIOR_BOUNDS)
    assert all(a < b for a, b in zip(bounds, bounds[1:]))
    assert bounds.index(F(23, 21)) == 2
    assert bounds[0] == F(17, 16)
    assert bounds[-1] == F(3581, 3106)
    assert tuple(bounds) != PRIOR_BOUNDS
    assert admissible_c() in PRIOR_BOUNDS


def test_everything_stays_rational():
    for _, expr, _ in derivation_chain():
        assert isinstance(expr.a, F) and isinstance(expr.b, F)
    for b in PRIOR_BOUNDS:
        assert isinstance(b, F)
    lo, hi = cutoffs(F(102, 100))
    assert isinstance(lo, F) and isinstance(hi, F)
