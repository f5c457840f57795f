"""Convolution and Mellin-transform quadrature against closed forms and the evaluator."""

from __future__ import annotations

import math
import random

import pytest

from foxhpos import ConvolutionSpec, build_foxh, eval_h
from foxhpos.errors import DomainError, SpecInvalidError, TooManyKernelsError
from foxhpos.kernels import kernel_eval, kernel_mellin, kernel_strip, phi, psi, varphi, eta
from foxhpos.oracle import (
    SUPPORT_UNIT,
    combine_support,
    convolve_pair,
    eval_f,
    eval_f_grid,
    kernel_fn,
    mellin_numeric,
)


def _indicator():
    return kernel_fn(phi(1, 0, 1))


def test_convolve_indicator_pair_closed_form():
    # integral_{0.5}^{1} dtau/tau = ln 2, frozen closed form
    g, sup = _indicator()
    got = convolve_pair(g, g, 0.5, tol=1e-12, support1=sup, support2=sup)
    assert got == pytest.approx(math.log(2.0), abs=1e-10)


def test_convolve_indicator_pair_vanishes_past_one():
    g, sup = _indicator()
    assert convolve_pair(g, g, 1.5, support1=sup, support2=sup) == 0.0
    assert convolve_pair(g, g, 1.0, support1=sup, support2=sup) == 0.0


def test_convolve_cross_checks_contour_evaluator():
    spec = ConvolutionSpec(varphi=((1, 0),), psi=((1, 0, 1),))
    f1, s1 = kernel_fn(varphi(1, 0))
    f2, s2 = kernel_fn(psi(1, 0, 1))
    direct = convolve_pair(f1, f2, 1.0, tol=1e-11, support1=s1, support2=s2)
    via_contour = eval_h(build_foxh(spec), 1.0).value
    assert direct == pytest.approx(via_contour, abs=1e-9)


def test_convolve_rejects_nonpositive_t():
    g, sup = _indicator()
    with pytest.raises(DomainError):
        convolve_pair(g, g, 0.0, support1=sup, support2=sup)


def test_eval_f_single_kernel_is_pointwise(exp_spec):
    assert eval_f(exp_spec, 2.0) == pytest.approx(math.exp(-2.0), abs=1e-14)


def test_eval_f_phi_only_support():
    spec = ConvolutionSpec(phi=((1, 0, 1), (1, 0, 1)))
    for t in (1.0, 1.5, 20.0):
        assert eval_f(spec, t) == 0.0
    for t in (0.1, 0.5, 0.9):
        assert eval_f(spec, t) > 0.0


def test_eval_f_eta_only_support():
    spec = ConvolutionSpec(eta=((1, 1, 2), (1, 1, 2)))
    for t in (0.2, 0.9, 1.0):
        assert eval_f(spec, t) == 0.0
    for t in (1.1, 3.0, 40.0):
        assert eval_f(spec, t) > 0.0


def test_eval_f_three_kernels_nested():
    # varphi v varphi v varphi at t = 1 against the contour evaluator
    spec = ConvolutionSpec(varphi=((1, 0), (1, 0), (1, 0)))
    got = eval_f(spec, 1.0, tol=1e-9)
    ref = eval_h(build_foxh(spec), 1.0).value
    assert got == pytest.approx(ref, abs=1e-7)


def test_eval_f_caps_kernel_count():
    spec = ConvolutionSpec(varphi=((1, 0),) * 4)
    with pytest.raises(TooManyKernelsError):
        eval_f(spec, 1.0)


def test_eval_f_rejects_empty_spec():
    with pytest.raises(SpecInvalidError):
        eval_f(ConvolutionSpec(), 1.0)


def test_eval_f_grid_ordering(psi_spec):
    rows = eval_f_grid(psi_spec, [0.5, 2.0], tol=1e-10)
    assert rows[0][0] == pytest.approx(1 / 1.5, abs=1e-10)
    assert rows[1][0] == pytest.approx(1 / 3.0, abs=1e-10)


def test_mellin_numeric_spot_values(exp_spec):
    got = mellin_numeric(lambda t: math.exp(-t), 2.0, tol=1e-10)
    assert got.real == pytest.approx(1.0, abs=1e-9)
    assert abs(got.imag) < 1e-10
    got = mellin_numeric(lambda t: kernel_eval(psi(1, 0, 1), t), 0.5, tol=1e-10)
    assert got.real == pytest.approx(math.pi, rel=1e-8)


def test_mellin_numeric_of_two_varphi_convolution():
    # f = varphi_{1,0} v varphi_{2,1}; transform at s = 1 is Gamma(1)Gamma(3) = 2
    spec = ConvolutionSpec(varphi=((1, 0), (2, 1)))
    got = mellin_numeric(lambda t: eval_f(spec, t, tol=1e-10), 1.0, tol=1e-7)
    assert got.real == pytest.approx(2.0, rel=1e-6)


def test_convolution_transform_law():
    # Mellin of a convolution equals the product of the factor transforms
    rng = random.Random(17)
    pairs = [
        (varphi(1, 0), psi(1, 0.5, 1.5)),
        (phi(1, 0, 2), varphi(2, 1)),
        (eta(1, 1, 2.5), psi(1.5, 0, 2)),
    ]
    for k1, k2 in pairs:
        f1, s1 = kernel_fn(k1)
        f2, s2 = kernel_fn(k2)
        lo = max(float(kernel_strip(k1).lo), float(kernel_strip(k2).lo), -3.0)
        hi = min(float(kernel_strip(k1).hi), float(kernel_strip(k2).hi), 3.0)
        s = complex(rng.uniform(lo + 0.15 * (hi - lo), hi - 0.15 * (hi - lo)), 0.4)
        conv = lambda t: convolve_pair(f1, f2, t, 1e-10, s1, s2)
        numeric = mellin_numeric(conv, s, tol=1e-8, support=combine_support(s1, s2))
        exact = kernel_mellin(k1, s) * kernel_mellin(k2, s)
        assert abs(numeric - exact) <= 1e-5 * abs(exact)


def test_convolution_commutativity():
    rng = random.Random(23)
    pairs = [
        (varphi(1, 0), psi(1, 0, 1)),
        (phi(1, 0, 2), eta(1, 1, 2)),
        (psi(2, 1, 2), varphi(0.5, 0.5)),
    ]
    for k1, k2 in pairs:
        f1, s1 = kernel_fn(k1)
        f2, s2 = kernel_fn(k2)
        for _ in range(3):
            t = math.exp(rng.uniform(math.log(0.05), math.log(20.0)))
            a = convolve_pair(f1, f2, t, 1e-10, s1, s2)
            b = convolve_pair(f2, f1, t, 1e-10, s2, s1)
            assert a == pytest.approx(b, abs=1e-8, rel=1e-8)
