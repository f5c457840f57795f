"""Independent ground truth: direct quadrature of Mellin convolutions and transforms.

Everything here works on the log axis u = ln(tau), which turns

    (g1 v g2)(t) = integral_0^inf (1/tau) g1(t/tau) g2(tau) dtau

into integral g1(t e^{-u}) g2(e^u) du with exponentially decaying tails
(the decay rates are the strip distances of the factors), and

    M[g](s) = integral_0^inf g(t) t^{s-1} dt

into integral g(e^u) e^{s u} du. Integration limits are tightened by the
declared supports (0,1) / (1,inf) / (0,inf), then truncated adaptively by
probing the integrand and handed to adaptive Gauss-Kronrod quadrature with
the support edges as breakpoints.
"""

from __future__ import annotations

import cmath
import math
import warnings
from typing import Callable, Optional, Sequence, Tuple

from scipy.integrate import IntegrationWarning, quad

from .construct import ConvolutionSpec, spec_kernels, validate_spec
from .errors import (
    DomainError,
    NoConvergenceError,
    OutOfStripError,
    SpecInvalidError,
    TooManyKernelsError,
)
from .kernels import (
    SUPPORT_ALL,
    SUPPORT_TAIL,
    SUPPORT_UNIT,
    Kernel,
    kernel_eval,
    kernel_support,
)

Support = Tuple[float, float]

_U_CAP = 600.0          # |ln tau| bound; keeps exp() in range for the factors
_QUAD_LIMIT = 200


def combine_support(s1: Support, s2: Support) -> Support:
    """Support of a Mellin convolution: (0,1)v(0,1)=(0,1), (1,inf)v(1,inf)=(1,inf)."""
    if s1 == SUPPORT_UNIT and s2 == SUPPORT_UNIT:
        return SUPPORT_UNIT
    if s1 == SUPPORT_TAIL and s2 == SUPPORT_TAIL:
        return SUPPORT_TAIL
    return SUPPORT_ALL


def kernel_fn(k: Kernel) -> Tuple[Callable[[float], float], Support]:
    """Pointwise evaluator and declared support of an elementary kernel."""
    return (lambda t: kernel_eval(k, t)), kernel_support(k)


def _probe_edge(f, start: float, direction: float, cut: float, cap: float) -> float:
    """March outward from start until |f| stays below cut (or the cap is hit)."""
    edge = start
    step = 1.0
    while abs(edge) < cap:
        nxt = edge + direction * step
        if abs(nxt) > cap:
            nxt = direction * cap
        if abs(f(nxt)) <= cut and abs(f(nxt + direction * 0.5)) <= cut:
            return nxt
        edge = nxt
        step *= 1.7
    return direction * cap


def _integrate_real(f, lo: float, hi: float, tol: float, anchors: Sequence[float]):
    """Adaptive quadrature of a real integrand on a truncated window."""
    inner = sorted(x for x in set(anchors) if lo < x < hi)
    finite = [x for x in (lo, hi) if math.isfinite(x)] + inner
    samples = sorted(finite) or [0.0]
    samples = samples + [0.5 * (a + b) for a, b in zip(samples, samples[1:])]
    samples += [samples[0] - 1.0, samples[-1] + 1.0]
    samples = [x for x in samples if lo <= x <= hi]
    fscale = max((abs(f(x)) for x in samples), default=0.0)
    # truncation cut and absolute tolerance follow the integrand's own scale,
    # so far-tail evaluations keep relative accuracy
    scale = max(fscale, 1e-300)
    cut = scale * tol * 1e-2
    if math.isinf(lo):
        left_start = min(inner, default=min(hi, 0.0)) - 1.0
        lo = _probe_edge(f, left_start, -1.0, cut, _U_CAP)
    if math.isinf(hi):
        right_start = max(inner, default=max(lo, 0.0)) + 1.0
        hi = _probe_edge(f, right_start, +1.0, cut, _U_CAP)
    if not lo < hi:
        return 0.0, 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(
            f,
            lo,
            hi,
            points=inner or None,
            limit=_QUAD_LIMIT,
            epsabs=0.5 * tol * scale,
            epsrel=max(1e-12, 0.25 * tol),
        )
    if not math.isfinite(val) or err > max(
        1e3 * tol * scale, 1e-5 * max(abs(val), 1e-3 * scale)
    ):
        raise NoConvergenceError(
            f"adaptive quadrature error {err:.3g} exceeds tolerance {tol:.3g}"
        )
    return val, err


def _conv_bounds(t: float, support1: Support, support2: Support) -> Tuple[float, float]:
    lt = math.log(t)
    lo_u, hi_u = -math.inf, math.inf
    if support2 == SUPPORT_UNIT:
        hi_u = 0.0
    elif support2 == SUPPORT_TAIL:
        lo_u = 0.0
    if support1 == SUPPORT_UNIT:
        lo_u = max(lo_u, lt)
    elif support1 == SUPPORT_TAIL:
        hi_u = min(hi_u, lt)
    return lo_u, hi_u


def convolve_pair_result(
    g1: Callable[[float], float],
    g2: Callable[[float], float],
    t: float,
    tol: float = 1e-10,
    support1: Support = SUPPORT_ALL,
    support2: Support = SUPPORT_ALL,
) -> Tuple[float, float]:
    """Mellin convolution value and quadrature error estimate at t."""
    if not t > 0:
        raise DomainError(f"t = {t} must be > 0")
    lo_u, hi_u = _conv_bounds(t, support1, support2)
    if not lo_u < hi_u:
        return 0.0, 0.0
    lt = math.log(t)

    def integrand(u: float) -> float:
        x1 = lt - u
        if not (abs(x1) <= _U_CAP + 50 and abs(u) <= _U_CAP + 50):
            return 0.0  # also covers non-finite evaluation points
        return g1(math.exp(x1)) * g2(math.exp(u))

    return _integrate_real(integrand, lo_u, hi_u, tol, anchors=(0.0, lt))


def convolve_pair(
    g1: Callable[[float], float],
    g2: Callable[[float], float],
    t: float,
    tol: float = 1e-10,
    support1: Support = SUPPORT_ALL,
    support2: Support = SUPPORT_ALL,
) -> float:
    """Mellin convolution (g1 v g2)(t) = integral (1/tau) g1(t/tau) g2(tau) dtau."""
    return convolve_pair_result(g1, g2, t, tol, support1, support2)[0]


def eval_f_result(spec: ConvolutionSpec, t: float, tol: float = 1e-10) -> Tuple[float, float]:
    """Convolution value and error estimate; left-fold in block order."""
    bad = validate_spec(spec)
    if bad:
        raise SpecInvalidError("; ".join(msg for _, msg in bad))
    ks = spec_kernels(spec)
    if not ks:
        raise SpecInvalidError("empty spec: no kernels to convolve")
    if len(ks) > 3:
        raise TooManyKernelsError(
            f"{len(ks)} kernels; nested quadrature is capped at 3"
        )
    if not t > 0:
        raise DomainError(f"t = {t} must be > 0")
    if len(ks) == 1:
        return kernel_eval(ks[0], t), 0.0
    f1, s1 = kernel_fn(ks[0])
    f2, s2 = kernel_fn(ks[1])
    if len(ks) == 2:
        return convolve_pair_result(f1, f2, t, tol, s1, s2)
    f3, s3 = kernel_fn(ks[2])
    s12 = combine_support(s1, s2)
    inner_tol = tol / 50.0

    def g12(x: float) -> float:
        return convolve_pair(f1, f2, x, inner_tol, s1, s2)

    return convolve_pair_result(g12, f3, t, tol, s12, s3)


def eval_f(spec: ConvolutionSpec, t: float, tol: float = 1e-10) -> float:
    """Direct numerical value of the convolution f(t); ground truth for eval_h."""
    return eval_f_result(spec, t, tol)[0]


def eval_f_grid(
    spec: ConvolutionSpec, grid: Sequence[float], tol: float = 1e-10
) -> list:
    """Pointwise eval_f over a grid, as (value, err) tuples ordered by input."""
    return [eval_f_result(spec, t, tol) for t in grid]


def mellin_numeric(
    g: Callable[[float], float],
    s: complex,
    tol: float = 1e-8,
    support: Support = SUPPORT_ALL,
    strip=None,
    limit: int = _QUAD_LIMIT,
) -> complex:
    """Numerical Mellin transform integral g(t) t^{s-1} dt via t = e^u."""
    s = complex(s)
    if strip is not None:
        lo_s = float(strip[0]) if not hasattr(strip, "lo") else float(strip.lo)
        hi_s = float(strip[1]) if not hasattr(strip, "hi") else float(strip.hi)
        if not lo_s < s.real < hi_s:
            raise OutOfStripError(f"Re(s) = {s.real} outside declared strip")
    lo_u, hi_u = -math.inf, math.inf
    if support == SUPPORT_UNIT:
        hi_u = 0.0
    elif support == SUPPORT_TAIL:
        lo_u = 0.0
    x = s.real

    def magnitude(u: float) -> float:
        if abs(u) > _U_CAP + 50:
            return 0.0
        return abs(g(math.exp(u))) * math.exp(x * u)

    # truncate using the decaying magnitude, then integrate the complex integrand
    samples = [v for v in (-2.0, -0.5, 0.0, 0.5, 2.0) if lo_u <= v <= hi_u]
    fscale = max((magnitude(v) for v in samples), default=0.0)
    scale = max(fscale, 1e-300)
    cut = scale * tol * 1e-2
    lo_eff = lo_u if math.isfinite(lo_u) else _probe_edge(magnitude, -1.0, -1.0, cut, _U_CAP)
    hi_eff = hi_u if math.isfinite(hi_u) else _probe_edge(magnitude, 1.0, +1.0, cut, _U_CAP)
    if not lo_eff < hi_eff:
        return complex(0.0)

    def integrand(u: float) -> complex:
        if abs(u) > _U_CAP + 50:
            return 0.0
        return g(math.exp(u)) * cmath.exp(s * u)

    inner = [v for v in (0.0,) if lo_eff < v < hi_eff]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(
            integrand,
            lo_eff,
            hi_eff,
            points=inner or None,
            limit=limit,
            epsabs=0.5 * tol * scale,
            epsrel=max(1e-12, 0.25 * tol),
            complex_func=True,
        )
    if not (math.isfinite(val.real) and math.isfinite(val.imag)) or abs(err) > max(
        1e3 * tol * scale, 1e-5 * max(abs(val), 1e-3 * scale)
    ):
        raise NoConvergenceError(
            f"Mellin quadrature error {abs(err):.3g} exceeds tolerance {tol:.3g}"
        )
    return complex(val)
