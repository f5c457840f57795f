"""Spec-to-parameter-set mapping and e.p. certification."""

from __future__ import annotations

import math
import random
from fractions import Fraction as F

import pytest

from foxhpos import ConvolutionSpec, build_foxh, char_params, ep_report, mellin_strip, spec_mellin, xi_value
from foxhpos.corpus import generate_specs
from foxhpos.errors import IndexRuleError, SpecInvalidError
from foxhpos.params import strip_endpoints


def test_build_single_varphi(exp_spec):
    h = build_foxh(exp_spec)
    assert (h.m, h.n, h.p, h.q) == (1, 0, 0, 1)
    assert h.upper == ()
    assert h.lower == ((0, 1),)


def test_build_single_psi(psi_spec):
    h = build_foxh(psi_spec)
    assert (h.m, h.n, h.p, h.q) == (1, 1, 1, 1)
    assert h.upper == ((0, 1),)
    assert h.lower == ((0, 1),)


def test_build_varphi_eta_block_order():
    spec = ConvolutionSpec(varphi=((1, 0),), eta=((1, 1, 2),))
    h = build_foxh(spec)
    assert (h.m, h.n, h.p, h.q) == (1, 1, 1, 2)
    assert h.upper == ((0, 1),)
    assert h.lower == ((0, 1), (-1, 1))


def test_build_rejects_bad_constraints():
    with pytest.raises(SpecInvalidError):
        build_foxh(ConvolutionSpec(varphi=((-1, 0),)))
    with pytest.raises(SpecInvalidError):
        build_foxh(ConvolutionSpec(varphi=((1, 0),), eta=((1, 1, 1.5),)))


def test_build_rejects_index_rule():
    with pytest.raises(IndexRuleError):
        build_foxh(ConvolutionSpec(phi=((1, 0, 2),)))


def test_ep_single_varphi(exp_spec):
    rep = ep_report(exp_spec)
    assert rep.ok
    assert rep.chi_prime == 1
    assert (rep.strip.lo, float(rep.strip.hi)) == (0, math.inf)
    assert rep.pole_check_mode == "exact"


def test_ep_rejects_phi_only():
    rep = ep_report(ConvolutionSpec(phi=((1, 0, 2),)))
    assert not rep.ok
    assert any(rule == "index.rule" for rule, _ in rep.violations)


def test_ep_varphi_psi_strip_and_chi():
    spec = ConvolutionSpec(varphi=((1, 0),), psi=((2, 1, 3),))
    rep = ep_report(spec)
    assert rep.ok
    assert rep.chi_prime == 1 + 2 * 2
    assert (rep.strip.lo, rep.strip.hi) == (0, F(3, 2))


def test_ep_collects_constraint_violations():
    rep = ep_report(ConvolutionSpec(psi=((1, 0, 0),)))
    assert not rep.ok
    assert any(rule == "psi.r.positive" for rule, _ in rep.violations)


def _random_specs(n, seed=5, **kw):
    return generate_specs(seed, n, **kw)


def test_strip_of_built_params_coincides_with_spec_strip():
    for spec in _random_specs(25):
        rep = ep_report(spec)
        strip = mellin_strip(build_foxh(spec))
        assert strip.lo == rep.strip.lo
        assert strip.hi == rep.strip.hi


def test_chi_of_built_params_equals_chi_prime():
    for spec in _random_specs(25, seed=6):
        assert char_params(build_foxh(spec)).chi == ep_report(spec).chi_prime


def test_index_bookkeeping():
    for spec in _random_specs(40, seed=7):
        h = build_foxh(spec)
        assert h.q - h.p == spec.n1
        assert h.m - h.n == spec.n1 + spec.n2 - spec.n4
        assert h.p + h.q == spec.n1 + 2 * spec.n2 + 2 * spec.n3 + 2 * spec.n4


def test_gamma_product_matches_xi_at_random_strip_points():
    rng = random.Random(99)
    for spec in _random_specs(10, seed=8):
        h = build_foxh(spec)
        lo, hi = strip_endpoints(h)
        lo_f, hi_f = float(lo), min(float(hi), float(lo) + 6.0)
        for _ in range(5):
            s = complex(
                rng.uniform(lo_f + 0.05 * (hi_f - lo_f), hi_f - 0.05 * (hi_f - lo_f)),
                rng.uniform(-4.0, 4.0),
            )
            product = spec_mellin(spec, s)
            xi = complex(xi_value(h, s))
            assert abs(product - xi) <= 1e-10 * abs(xi)
