"""Parameter-set validation, characteristic parameters, pole separation, strips."""

from __future__ import annotations

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxhpos import FoxHParams, char_params, mellin_strip, pole_separation, pole_separation_ok, validate_params
from foxhpos.errors import EmptyStripError, InvalidParamsError
from foxhpos.params import strip_endpoints
from foxhpos.rewrite import power_arg, reciprocal


def test_validate_accepts_exponential_instance():
    h = FoxHParams(m=1, n=0, p=0, q=1, lower=((0, 1),))
    assert validate_params(h).ok


def test_validate_rejects_m_exceeding_q():
    h = FoxHParams(m=2, n=0, p=0, q=1, lower=((0, 1),))
    rep = validate_params(h)
    assert not rep.ok
    assert any(rule == "idx.m" for rule, _ in rep.violations)


def test_validate_rejects_nonpositive_B():
    h = FoxHParams(m=1, n=0, p=0, q=1, lower=((0, -1),))
    rep = validate_params(h)
    assert not rep.ok
    assert any(rule == "B.positive" for rule, _ in rep.violations)


def test_validate_rejects_length_mismatch_and_nan():
    assert not validate_params(FoxHParams(m=1, n=0, p=0, q=2, lower=((0, 1),))).ok
    assert not validate_params(
        FoxHParams(m=1, n=0, p=0, q=1, lower=((math.nan, 1),))
    ).ok


def test_char_params_exponential_instance():
    cp = char_params(FoxHParams(m=1, n=0, p=0, q=1, lower=((0, 1),)))
    assert cp.chi == 1
    assert cp.mu == 1
    assert cp.delta == F(-1, 2)
    assert cp.kappa == 1.0


def test_char_params_balanced_instance():
    cp = char_params(
        FoxHParams(m=1, n=1, p=1, q=1, upper=((0, 1),), lower=((0, 1),))
    )
    assert (cp.chi, cp.mu, cp.delta, cp.kappa) == (2, 0, 0, 1.0)


def test_char_params_two_lower_pairs():
    cp = char_params(FoxHParams(m=2, n=0, p=0, q=2, lower=((0, 1), (0, 1))))
    assert (cp.chi, cp.mu, cp.delta) == (2, 2, -1)


def test_char_params_requires_valid_input():
    with pytest.raises(InvalidParamsError):
        char_params(FoxHParams(m=2, n=0, p=0, q=1, lower=((0, 1),)))


def test_char_params_kappa_modes():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((0, 2),), lower=((0, 3),))
    printed = char_params(h).kappa
    conventional = char_params(h, kappa_mode="conventional").kappa
    assert printed == pytest.approx(2.0**-2 * 3.0**3)
    assert conventional == pytest.approx(2.0**-2 * 3.0**3)
    # differ once the blocks beyond n contribute
    h2 = FoxHParams(m=1, n=0, p=1, q=1, upper=((0, 2),), lower=((0, 3),))
    assert char_params(h2).kappa == 1.0
    assert char_params(h2, kappa_mode="conventional").kappa == pytest.approx(
        2.0**-2 * 3.0**3
    )


# --- pole separation ---------------------------------------------------------


def _enumerate_clash(A, alpha, B, beta, limit=2000):
    """Independent oracle: intersect the two pole progressions exactly."""
    lower_poles = {F(-(beta + l), 1) / B for l in range(limit + 1)}
    upper_poles = {F(1 - alpha + lp, 1) / A for lp in range(limit + 1)}
    return bool(lower_poles & upper_poles)


def test_pole_separation_disjoint_unit_pairs():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((0, 1),), lower=((0, 1),))
    assert pole_separation_ok(h)


def test_pole_separation_detects_coincident_pole_at_zero():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((1, 1),), lower=((0, 1),))
    assert not pole_separation_ok(h)


def test_pole_separation_rational_case_matches_enumeration():
    # frozen from the enumeration oracle: progressions of (1/2, 1) vs (0, 2) are disjoint
    A, alpha, B, beta = F(1), F(1, 2), F(2), F(0)
    assert not _enumerate_clash(A, alpha, B, beta)
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((F(1, 2), F(1)),), lower=((F(0), F(2)),))
    check = pole_separation(h)
    assert check.ok
    assert check.mode == "exact"


def test_pole_separation_float_inputs_use_bounded_scan():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((0.5, 1.0),), lower=((0.0, 2.0),))
    check = pole_separation(h)
    assert check.ok
    assert check.mode == "bounded"
    h2 = FoxHParams(m=1, n=1, p=1, q=1, upper=((1.0, 1.0),), lower=((0.0, 1.0),))
    assert not pole_separation(h2).ok


_small_fraction = st.fractions(
    min_value=F(-3), max_value=F(3), max_denominator=4
)
_small_slope = st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4)


@given(alpha=_small_fraction, A=_small_slope, beta=_small_fraction, B=_small_slope)
@settings(max_examples=150)
def test_pole_separation_agrees_with_enumeration(alpha, A, beta, B):
    # denominators <= 4 and |values| <= 3 keep any clash within the enumeration range
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((alpha, A),), lower=((beta, B),))
    assert pole_separation_ok(h) == (not _enumerate_clash(A, alpha, B, beta))


@given(
    m=st.integers(0, 2),
    n=st.integers(0, 2),
    pairs=st.lists(st.tuples(_small_fraction, _small_slope), min_size=4, max_size=4),
)
@settings(max_examples=60)
def test_pole_separation_vacuous_when_one_family_empty(m, n, pairs):
    if m > 0 and n > 0:
        m = 0
    h = FoxHParams(m=m, n=n, p=2, q=2, upper=tuple(pairs[:2]), lower=tuple(pairs[2:]))
    assert pole_separation_ok(h)


# --- strips ------------------------------------------------------------------


def test_mellin_strip_unit_instance():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((0, 1),), lower=((0, 1),))
    strip = mellin_strip(h)
    assert (strip.lo, strip.hi) == (0, 1)


def test_mellin_strip_open_above_when_no_upper():
    strip = mellin_strip(FoxHParams(m=1, n=0, p=0, q=1, lower=((0, 1),)))
    assert strip.lo == 0
    assert strip.hi == math.inf


def test_mellin_strip_empty_raises():
    h = FoxHParams(m=1, n=1, p=1, q=1, upper=((0, 1),), lower=((-2, 1),))
    with pytest.raises(EmptyStripError):
        mellin_strip(h)


# --- invariants --------------------------------------------------------------


@st.composite
def _rational_params(draw, allow_empty=True):
    n = draw(st.integers(0, 2))
    p = n + draw(st.integers(0, 2))
    m = draw(st.integers(0, 2))
    q = m + draw(st.integers(0, 2))
    if not allow_empty and p + q == 0:
        q = 1
        m = draw(st.integers(0, 1))
    upper = tuple(
        (draw(_small_fraction), draw(_small_slope)) for _ in range(p)
    )
    lower = tuple(
        (draw(_small_fraction), draw(_small_slope)) for _ in range(q)
    )
    return FoxHParams(m=m, n=n, p=p, q=q, upper=upper, lower=lower)


@given(h=_rational_params(), data=st.data())
@settings(max_examples=100)
def test_char_params_invariant_under_block_permutations(h, data):
    # chi, mu, delta and the conventional kappa are block-permutation invariant;
    # the as-printed kappa is not (its B-product over j <= n can straddle the
    # m-boundary of the lower list), so it is exempted here.
    blocks = [
        list(h.upper[: h.n]),
        list(h.upper[h.n :]),
        list(h.lower[: h.m]),
        list(h.lower[h.m :]),
    ]
    permuted = [
        data.draw(st.permutations(block)) if len(block) > 1 else block
        for block in blocks
    ]
    h2 = FoxHParams(
        m=h.m,
        n=h.n,
        p=h.p,
        q=h.q,
        upper=tuple(permuted[0]) + tuple(permuted[1]),
        lower=tuple(permuted[2]) + tuple(permuted[3]),
    )
    a, b = char_params(h, kappa_mode="conventional"), char_params(h2, kappa_mode="conventional")
    assert (a.chi, a.mu, a.delta) == (b.chi, b.mu, b.delta)
    assert a.kappa == pytest.approx(b.kappa, rel=1e-13)


@given(h=_rational_params(), omega=st.fractions(min_value=F(1, 3), max_value=F(3), max_denominator=6))
@settings(max_examples=100)
def test_strip_endpoints_scale_under_power_arg(h, omega):
    lo, hi = strip_endpoints(h)
    scaled = power_arg(h, omega).params
    lo2, hi2 = strip_endpoints(scaled)
    expected_lo = lo if math.isinf(float(lo)) else lo / omega
    expected_hi = hi if math.isinf(float(hi)) else hi / omega
    assert lo2 == expected_lo
    assert hi2 == expected_hi


@given(h=_rational_params())
@settings(max_examples=100)
def test_chi_invariant_under_reciprocal(h):
    assert char_params(reciprocal(h)).chi == char_params(h).chi
