"""Numerical Mellin-Barnes inversion: evaluate H(t) on the positive reals.

The contour is the vertical line Re(s) = c inside the Mellin strip. For real
parameters the integrand is conjugate-symmetric, so

    H(t) = (1/pi) * Re  integral_0^Y  Xi(c + iy) t^{-(c+iy)} dy  +  tail,

with Y chosen so the Stirling decay envelope |Xi(c+iy)| <= C y^sigma e^{-pi chi y / 2}
pushes the tail below the requested tolerance. The quadrature is composite
Gauss-Legendre with a fixed order per panel, the panel width adapted to the
oscillation scale 2*pi/|ln t|; comparing against the half-order rule gives the
quadrature error estimate. All Gamma factors are evaluated as log-Gamma and
summed together with -s*ln(t) before a single exponentiation.

Validation, pole separation, the contour abscissa, and the decay envelope
depend only on the parameter set, so they are computed once per (params,
options) pair and cached; grid and transform evaluations reuse the plan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from .errors import (
    ChiNonpositiveError,
    DomainError,
    EmptyStripError,
    FoxHError,
    InvalidParamsError,
    NoConvergenceError,
    OutOfStripError,
    PoleOnContourError,
    PoleSeparationError,
)
from .loggamma import log_gamma
from .params import (
    FoxHParams,
    char_params,
    pole_separation_ok,
    strip_endpoints,
    validate_params,
)

_SAFETY_LOG = math.log(10.0)  # headroom on the sampled decay constant
_EDGE_CLEARANCE = 1e-6        # minimum contour distance from real-axis poles
_NUDGE = 1e-3


@dataclass(frozen=True)
class EvalOptions:
    """Evaluation controls; contour_re overrides the default abscissa."""

    tol: float = 1e-10
    contour_re: Optional[float] = None
    max_height: float = 1e4
    panel_order: int = 32

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if not self.max_height > 0:
            raise ValueError("max_height must be > 0")
        if self.panel_order < 4:
            raise ValueError("panel_order must be >= 4")


@dataclass(frozen=True)
class EvalResult:
    """One evaluation point: value, error estimate, and quadrature diagnostics.

    imag_residual is |Im Xi(c)| / max(1, |Xi(c)|) at the contour abscissa,
    where analyticity demands a real value for real parameters; it reports
    how well the log-domain assembly respects that. error is set instead of
    raising when the point came from a grid evaluation.
    """

    value: float
    abs_err_est: float
    height_used: float
    panels: int
    imag_residual: float
    error: Optional[str] = None


def xi_log(h: FoxHParams, s) -> np.ndarray:
    """Sum of signed log-Gamma factors of the Mellin kernel at s (vectorized).

    xi_log = sum_{j<=m} lg(beta_j + B_j s) + sum_{j<=n} lg(1 - alpha_j - A_j s)
             - sum_{j>m} lg(1 - beta_j - B_j s) - sum_{j>n} lg(alpha_j + A_j s)
    """
    s_arr = np.asarray(s, dtype=np.complex128)
    scalar = s_arr.ndim == 0
    sv = np.atleast_1d(s_arr).ravel()
    total = _xi_log_flat(_factor_table(h), sv)
    if scalar:
        return total[0]
    return total.reshape(s_arr.shape)


def _factor_table(h: FoxHParams):
    """(offset, slope, sign) triples: xi_log(s) = sum sign_k * lg(off_k + slope_k * s)."""
    offs, slopes, signs = [], [], []
    for j, (beta, B) in enumerate(h.lower):
        if j < h.m:
            offs.append(float(beta))
            slopes.append(float(B))
            signs.append(1.0)
        else:
            offs.append(1.0 - float(beta))
            slopes.append(-float(B))
            signs.append(-1.0)
    for j, (alpha, A) in enumerate(h.upper):
        if j < h.n:
            offs.append(1.0 - float(alpha))
            slopes.append(-float(A))
            signs.append(1.0)
        else:
            offs.append(float(alpha))
            slopes.append(float(A))
            signs.append(-1.0)
    return np.array(offs), np.array(slopes), np.array(signs)


def _xi_log_flat(table, sv: np.ndarray) -> np.ndarray:
    offs, slopes, signs = table
    total = np.zeros_like(sv)
    for off, slope, sign in zip(offs, slopes, signs):
        total = total + sign * log_gamma(off + slope * sv)
    return total


def xi_value(h: FoxHParams, s):
    """Gamma-product Mellin kernel Xi(s), exponentiated once from the log sum."""
    return np.exp(xi_log(h, s))


def _real_axis_pole_distance(table, c: float) -> float:
    """Distance from the nearest real-axis pole among all Gamma factors."""
    offs, slopes, _ = table
    dist = math.inf
    for off, slope in zip(offs, slopes):
        x = off + slope * c
        nearest = round(x)
        if nearest <= 0:
            dist = min(dist, abs(x - nearest))
    return dist


# bound on (c - edge) * |ln t| before the contour moves toward the edge; the
# integrand magnitude t^{-(c-edge)} = e^{budget} times machine epsilon sets the
# cancellation floor, so ~e^14 * 1e-16 ~ 1e-10 absolute
_SHIFT_BUDGET = 14.0
_MAX_PANELS = 40000


class _ContourPlan:
    """Per-instance contour state shared by all evaluation points.

    Holds the validated factor table, the default abscissa, and a small cache
    of decay envelopes keyed by abscissa. Extreme arguments shift the contour
    toward the favorable strip edge: the integrand magnitude scales like
    t^{-c}, so keeping (c - lo)|ln t| (t < 1) or (hi - c)|ln t| (t > 1)
    bounded avoids catastrophic cancellation.
    """

    def __init__(self, h: FoxHParams, opts: EvalOptions):
        rep = validate_params(h)
        if not rep.ok:
            raise InvalidParamsError("; ".join(msg for _, msg in rep.violations))
        if not pole_separation_ok(h):
            raise PoleSeparationError("upper and lower Gamma pole families collide")
        chi = float(char_params(h).chi)
        if not chi > 0:
            raise ChiNonpositiveError(f"chi = {chi} must be > 0 for contour evaluation")
        lo, hi = strip_endpoints(h)
        self.lo_f, self.hi_f = float(lo), float(hi)
        if not self.lo_f < self.hi_f:
            raise EmptyStripError(f"empty Mellin strip: lo={self.lo_f} >= hi={self.hi_f}")

        self.h = h
        self.opts = opts
        self.table = _factor_table(h)
        self.user_c = opts.contour_re is not None
        self.default_c = self._clear_of_poles(self._default_abscissa(opts.contour_re))
        self.decay = 0.5 * math.pi * chi
        self._envelopes: dict = {}

        xi_c = complex(
            np.exp(_xi_log_flat(self.table, np.array([complex(self.default_c)]))[0])
        )
        self.imag_residual = abs(xi_c.imag) / max(1.0, abs(xi_c))

    def _default_abscissa(self, requested: Optional[float]) -> float:
        lo, hi = self.lo_f, self.hi_f
        if requested is not None:
            if not lo < requested < hi:
                raise OutOfStripError(
                    f"contour_re = {requested} outside strip ({lo}, {hi})"
                )
            return float(requested)
        if math.isinf(lo) and math.isinf(hi):
            return 0.0
        if math.isinf(hi):
            return lo + 1.0
        if math.isinf(lo):
            return hi - 1.0
        return 0.5 * (lo + hi)

    def _clear_of_poles(self, c: float) -> float:
        lo, hi = self.lo_f, self.hi_f
        if _real_axis_pole_distance(self.table, c) >= _EDGE_CLEARANCE:
            return c
        # nudge toward the roomier side of the strip, staying inside it
        direction = 1.0 if (hi - c) >= (c - lo) else -1.0
        for k in range(1, 60):
            cand = c + direction * _NUDGE * k
            if not lo < cand < hi:
                direction = -direction
                cand = c + direction * _NUDGE * k
                if not lo < cand < hi:
                    break
            if _real_axis_pole_distance(self.table, cand) >= _EDGE_CLEARANCE:
                return cand
        raise PoleOnContourError(
            f"no contour abscissa clear of real-axis poles near c = {c}"
        )

    def _point_abscissa(self, ln_t: float) -> float:
        """Contour for one point; quantized so envelope caches stay small."""
        c = self.default_c
        if self.user_c or ln_t == 0.0:
            return c
        mag = abs(ln_t)
        if ln_t < 0:
            edge = self.lo_f if math.isfinite(self.lo_f) else c - 8.0
            if (c - edge) * mag <= _SHIFT_BUDGET:
                return c
            # quantize the offset via the binary exponent of |ln t|
            eps = max(_SHIFT_BUDGET / 2.0 ** math.ceil(math.log2(mag)), 1e-4)
            return self._clear_of_poles(min(c, edge + eps))
        edge = self.hi_f if math.isfinite(self.hi_f) else c + 8.0
        if (edge - c) * mag <= _SHIFT_BUDGET:
            return c
        eps = max(_SHIFT_BUDGET / 2.0 ** math.ceil(math.log2(mag)), 1e-4)
        return self._clear_of_poles(max(c, edge - eps))

    def _envelope(self, c: float):
        """(sigma, log C) of the Stirling bound |Xi(c+iy)| <= C y^sigma e^{-a y}."""
        cached = self._envelopes.get(c)
        if cached is not None:
            return cached
        offs, slopes, signs = self.table
        sigma = float(np.sum(signs * (offs + slopes * c - 0.5)))
        ys = np.array([1.0, 2.0, 4.0, 8.0])
        log_xi = _xi_log_flat(self.table, c + 1j * ys).real
        log_env = (
            float(np.max(log_xi + self.decay * ys - sigma * np.log(ys))) + _SAFETY_LOG
        )
        if len(self._envelopes) < 64:
            self._envelopes[c] = (sigma, log_env)
        return sigma, log_env

    def _log_tail(self, sigma: float, log_c: float, Y: float) -> float:
        a = self.decay
        if sigma <= 0:
            return log_c + sigma * math.log(Y) - a * Y - math.log(a)
        frac = sigma / (a * Y)
        if frac >= 0.9:
            return math.inf
        return log_c + sigma * math.log(Y) - a * Y - math.log(a * (1.0 - frac))

    def _solve_height(self, sigma: float, log_c: float, log_target: float) -> float:
        a = self.decay
        max_height = self.opts.max_height
        Y = max(6.0, 2.2 * sigma / a if sigma > 0 else 6.0)
        for _ in range(60):
            rhs = (log_c + sigma * math.log(max(Y, 1.0)) - log_target - math.log(a)) / a
            new_Y = max(6.0, rhs, 2.2 * sigma / a if sigma > 0 else 0.0)
            if abs(new_Y - Y) < 1e-3 * max(1.0, Y):
                Y = new_Y
                break
            Y = new_Y
        while self._log_tail(sigma, log_c, Y) > log_target and Y < max_height:
            Y *= 1.25
        if self._log_tail(sigma, log_c, Y) > log_target:
            raise NoConvergenceError(
                f"tail bound not reached below max_height = {max_height}"
            )
        return min(Y, max_height)

    def eval_point(self, t: float) -> EvalResult:
        if not t > 0:
            raise DomainError(f"t = {t} must be > 0")
        opts = self.opts
        ln_t = math.log(t)
        c = self._point_abscissa(ln_t)
        sigma, log_env = self._envelope(c)
        log_scale = -c * ln_t - math.log(math.pi)
        log_target = math.log(0.5 * opts.tol)
        Y = self._solve_height(sigma, log_env + log_scale, log_target)
        tail = math.exp(self._log_tail(sigma, log_env + log_scale, Y))

        # resolve the oscillation e^{-iy ln t}: at most ~4 periods per panel
        period = 2.0 * math.pi / abs(ln_t) if ln_t != 0.0 else math.inf
        width = min(2.0, 4.0 * period) if math.isfinite(period) else 2.0
        n_panels = max(4, int(math.ceil(Y / width)))
        if n_panels > _MAX_PANELS:
            raise NoConvergenceError(
                f"{n_panels} quadrature panels needed at t = {t}; argument too extreme"
            )
        edges = np.linspace(0.0, Y, n_panels + 1)
        mid = 0.5 * (edges[1:] + edges[:-1])
        half = 0.5 * (edges[1:] - edges[:-1])

        # both quadrature orders share one vectorized Xi evaluation
        ord_hi = opts.panel_order
        ord_lo = max(4, ord_hi // 2)
        x_hi, w_hi = _gl_nodes(ord_hi)
        x_lo, w_lo = _gl_nodes(ord_lo)
        nodes_hi = (mid[:, None] + half[:, None] * x_hi[None, :]).ravel()
        nodes_lo = (mid[:, None] + half[:, None] * x_lo[None, :]).ravel()
        s = c + 1j * np.concatenate([nodes_hi, nodes_lo])
        vals = np.exp(_xi_log_flat(self.table, s) - s * ln_t).real
        split = nodes_hi.size
        vals_hi = vals[:split].reshape(n_panels, ord_hi)
        vals_lo = vals[split:].reshape(n_panels, ord_lo)
        raw_hi = float(np.sum(half * (vals_hi * w_hi[None, :]).sum(axis=1)))
        raw_lo = float(np.sum(half * (vals_lo * w_lo[None, :]).sum(axis=1)))
        value = raw_hi / math.pi
        quad_err = abs(raw_hi - raw_lo) / math.pi
        # cancellation floor: the summed integrand magnitudes times machine eps
        round_floor = (
            math.exp(min(log_env - _SAFETY_LOG + log_scale, 300.0))
            * 3e-16
            * math.sqrt(nodes_hi.size)
        )

        return EvalResult(
            value=value,
            abs_err_est=quad_err + tail + round_floor,
            height_used=Y,
            panels=n_panels,
            imag_residual=self.imag_residual,
        )


@lru_cache(maxsize=16)
def _gl_nodes(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


@lru_cache(maxsize=128)
def _plan(h: FoxHParams, opts: EvalOptions) -> _ContourPlan:
    return _ContourPlan(h, opts)


def eval_h(h: FoxHParams, t: float, opts: Optional[EvalOptions] = None) -> EvalResult:
    """Evaluate H(t) by contour quadrature; preconditions are checked in order.

    Requires a structurally valid parameter set with separated pole families,
    chi > 0, a nonempty strip, and t > 0. The per-instance contour setup is
    cached, so repeated points on one parameter set are cheap.
    """
    return _plan(h, opts or EvalOptions()).eval_point(t)


def eval_h_grid(
    h: FoxHParams, grid: Sequence[float], opts: Optional[EvalOptions] = None
) -> List[EvalResult]:
    """Pointwise eval_h over a grid; per-point failures are collected, not raised.

    Results are ordered by input index. A failed point carries value nan,
    abs_err_est inf, and the error message.
    """
    out: List[EvalResult] = []
    for t in grid:
        try:
            out.append(eval_h(h, t, opts))
        except FoxHError as exc:
            out.append(
                EvalResult(
                    value=math.nan,
                    abs_err_est=math.inf,
                    height_used=0.0,
                    panels=0,
                    imag_residual=math.nan,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return out
