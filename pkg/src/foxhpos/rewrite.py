"""Positivity-preserving parameter-set rewrites.

Three elementary identities (argument reciprocal, argument power, power
weight) plus the Laplace, Euler, and product-Mellin extensions. Each
operation returns a new parameter set whose H-function satisfies an explicit
numeric contract against the input; positivity of the input transfers to the
output when the stated inequality gates hold. Entries with a zero slope
(A = 0 or B = 0) are rejected rather than special-cased, since the H
definition requires strictly positive slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NonpositiveOmegaError,
    OmegaOutOfRangeError,
    PreconditionFailedError,
)
from .params import (
    FoxHParams,
    MellinStrip,
    Number,
    _require_valid,
    char_params,
    strip_endpoints,
)


@dataclass(frozen=True)
class WeightedH:
    """A rewritten representation: original(t) = scalar * t^t_power * H_params(t^arg_power)."""

    params: FoxHParams
    scalar: float
    arg_power: float
    t_power: float


def reciprocal(h: FoxHParams) -> FoxHParams:
    """Swap argument for its reciprocal: H_h(t) = H_out(1/t).

    Indices become (n, m, q, p); upper' = (1-beta_j, B_j), lower' = (1-alpha_j, A_j).
    An involution.
    """
    _require_valid(h)
    return FoxHParams(
        m=h.n,
        n=h.m,
        p=h.q,
        q=h.p,
        upper=tuple((1 - b, B) for b, B in h.lower),
        lower=tuple((1 - a, A) for a, A in h.upper),
    )


def power_arg(h: FoxHParams, omega: Number) -> WeightedH:
    """Rescale the argument: H_h(t) = omega * H_out(t^omega) for all t > 0."""
    _require_valid(h)
    if not omega > 0:
        raise NonpositiveOmegaError(f"omega = {omega} must be > 0")
    params = FoxHParams(
        m=h.m,
        n=h.n,
        p=h.p,
        q=h.q,
        upper=tuple((a, omega * A) for a, A in h.upper),
        lower=tuple((b, omega * B) for b, B in h.lower),
    )
    return WeightedH(params=params, scalar=float(omega), arg_power=float(omega), t_power=0.0)


def power_weight(h: FoxHParams, w: Number) -> FoxHParams:
    """Absorb a power weight: t^w * H_h(t) = H_out(t); w = 0 is the identity."""
    _require_valid(h)
    return FoxHParams(
        m=h.m,
        n=h.n,
        p=h.p,
        q=h.q,
        upper=tuple((a + w * A, A) for a, A in h.upper),
        lower=tuple((b + w * B, B) for b, B in h.lower),
    )


def _min_lower_ratio(h: FoxHParams) -> float:
    """min over l <= m of beta_l / B_l; the negated strip floor."""
    lo, _ = strip_endpoints(h)
    return -float(lo)


def laplace_extend(h: FoxHParams, omega: Number, lam: Number) -> FoxHParams:
    """Laplace-transform extension: prepend the upper pair (1 - omega, lam).

    Contract: integral_0^inf e^{-s tau} tau^{omega-1} H_h(tau^lam) dtau
              = s^{-omega} * H_out(s^{-lam})  for s > 0.
    Gates: m*n > 0, chi > 0, lam > 0, omega + lam * min_{l<=m}(beta_l/B_l) > 0.
    """
    _require_valid(h)
    if h.m * h.n == 0:
        raise PreconditionFailedError("laplace_extend requires m > 0 and n > 0")
    if not float(char_params(h).chi) > 0:
        raise PreconditionFailedError("laplace_extend requires chi > 0")
    if not lam > 0:
        raise PreconditionFailedError(f"lambda = {lam} must be > 0")
    gate = float(omega) + float(lam) * _min_lower_ratio(h)
    if not gate > 0:
        raise PreconditionFailedError(
            f"omega + lambda*min(beta/B) = {gate} must be > 0"
        )
    return FoxHParams(
        m=h.m,
        n=h.n + 1,
        p=h.p + 1,
        q=h.q,
        upper=((1 - omega, lam),) + h.upper,
        lower=h.lower,
    )


def euler_extend(
    h: FoxHParams, omega1: Number, lam1: Number, omega2: Number, lam2: Number
) -> FoxHParams:
    """Euler-transform extension: two upper pairs prepended, one lower appended.

    Contract: integral_0^t tau^{omega1-1} (t-tau)^{lam1-1}
                  H_h(zeta tau^{omega2} (t-tau)^{lam2}) dtau
              = t^{omega1+lam1-1} * H_out(zeta t^{omega2+lam2})  for zeta, t > 0.
    Gates: m*n > 0, chi > 0, omega2 > 0, lam2 > 0 (zero slopes are rejected),
    omega1 + omega2*min(beta/B) > 0 and omega1 + lam2*min(beta/B) > 0.
    """
    _require_valid(h)
    if h.m * h.n == 0:
        raise PreconditionFailedError("euler_extend requires m > 0 and n > 0")
    if not float(char_params(h).chi) > 0:
        raise PreconditionFailedError("euler_extend requires chi > 0")
    if not omega2 >= 0 or not lam2 >= 0:
        raise PreconditionFailedError("omega2 and lambda2 must be >= 0")
    if omega2 == 0 or lam2 == 0:
        raise PreconditionFailedError(
            "omega2 = 0 or lambda2 = 0 would create a zero-slope pair; rejected"
        )
    ratio = _min_lower_ratio(h)
    gate1 = float(omega1) + float(omega2) * ratio
    gate2 = float(omega1) + float(lam2) * ratio
    if not gate1 > 0:
        raise PreconditionFailedError(
            f"omega1 + omega2*min(beta/B) = {gate1} must be > 0"
        )
    if not gate2 > 0:
        raise PreconditionFailedError(
            f"omega1 + lambda2*min(beta/B) = {gate2} must be > 0"
        )
    return FoxHParams(
        m=h.m,
        n=h.n + 2,
        p=h.p + 2,
        q=h.q + 1,
        upper=((1 - omega1, omega2), (1 - lam1, lam2)) + h.upper,
        lower=h.lower + ((1 - omega1 - lam1, omega2 + lam2),),
    )


def omega_range(
    h1: FoxHParams, h2: FoxHParams, lam: Number, variant: str = "direct"
) -> MellinStrip:
    """Admissible open interval for the product-Mellin exponent omega.

    For the direct pairing H_1(xi tau^lam) * H_2(zeta tau) the interval is
    (lam*lo1 + lo2, lam*hi1 + hi2) in terms of the factors' strip endpoints.
    For the reciprocal pairing H_1(xi tau^{-lam}) * H_2(zeta tau) the inner
    transform that defines the identity needs (s - omega)/lam inside the
    first factor's strip, which shifts the interval to
    (lo2 - lam*hi1, hi2 - lam*lo1). Empty index blocks contribute the
    matching infinities; the interval may be empty.
    """
    _require_valid(h1)
    _require_valid(h2)
    if variant not in ("direct", "reciprocal"):
        raise ValueError(f"unknown variant {variant!r}")
    if not lam > 0:
        raise PreconditionFailedError(f"lambda = {lam} must be > 0")
    lo1, hi1 = strip_endpoints(h1)
    lo2, hi2 = strip_endpoints(h2)

    def scale(x):
        # lam * (+-inf) keeps the sign; exact arithmetic otherwise
        if isinstance(x, float) and math.isinf(x):
            return x
        return lam * x

    if variant == "direct":
        lo = -math.inf if math.isinf(float(lo1)) or math.isinf(float(lo2)) else scale(lo1) + lo2
        hi = math.inf if math.isinf(float(hi1)) or math.isinf(float(hi2)) else scale(hi1) + hi2
    else:
        lo = -math.inf if math.isinf(float(hi1)) or math.isinf(float(lo2)) else lo2 - scale(hi1)
        hi = math.inf if math.isinf(float(lo1)) or math.isinf(float(hi2)) else hi2 - scale(lo1)
    return MellinStrip(lo, hi)


def product_extend(
    h1: FoxHParams,
    h2: FoxHParams,
    omega: Number,
    lam: Number,
    variant: str = "direct",
) -> FoxHParams:
    """Mellin transform of a product of two H-functions, as a new parameter set.

    variant "direct" pairs H_1(xi tau^lam) with H_2(zeta tau):
        indices (m1+n2, n1+m2, p1+q2, q1+p2),
        upper: h1 upper[:n1], (1 - beta''_j - omega B''_j, lam B''_j) over h2 lower,
               h1 upper[n1:],
        lower: h1 lower[:m1], (1 - alpha''_j - omega A''_j, lam A''_j) over h2 upper,
               h1 lower[m1:].
        Contract: integral tau^{omega-1} H_1(xi tau^lam) H_2(zeta tau) dtau
                  = zeta^{-omega} H_out(xi zeta^{-lam}).

    variant "reciprocal" pairs H_1(xi tau^{-lam}) with H_2(zeta tau):
        indices (m1+m2, n1+n2, p1+p2, q1+q2),
        upper: h1 upper[:n1], (alpha''_j + omega A''_j, lam A''_j) over h2 upper,
               h1 upper[n1:],
        lower: h1 lower[:m1], (beta''_j + omega B''_j, lam B''_j) over h2 lower,
               h1 lower[m1:].
        Contract: integral tau^{omega-1} H_1(xi tau^{-lam}) H_2(zeta tau) dtau
                  = zeta^{omega} H_out(xi zeta^{lam}).

    Gates: chi1, chi2 > 0; lam > 0; each factor's strip nonempty; omega inside
    omega_range(h1, h2, lam).
    """
    _require_valid(h1)
    _require_valid(h2)
    if variant not in ("direct", "reciprocal"):
        raise ValueError(f"unknown variant {variant!r}")
    if not float(char_params(h1).chi) > 0 or not float(char_params(h2).chi) > 0:
        raise PreconditionFailedError("product_extend requires chi > 0 for both factors")
    if not lam > 0:
        raise PreconditionFailedError(f"lambda = {lam} must be > 0")
    for label, hh in (("first", h1), ("second", h2)):
        lo, hi = strip_endpoints(hh)
        if not float(lo) < float(hi):
            raise PreconditionFailedError(f"{label} factor has an empty Mellin strip")
    rng = omega_range(h1, h2, lam, variant=variant)
    if not rng.contains(omega):
        raise OmegaOutOfRangeError(
            f"omega = {omega} outside ({float(rng.lo)}, {float(rng.hi)})"
        )
    if variant == "direct":
        mid_upper = tuple((1 - b - omega * B, lam * B) for b, B in h2.lower)
        mid_lower = tuple((1 - a - omega * A, lam * A) for a, A in h2.upper)
        return FoxHParams(
            m=h1.m + h2.n,
            n=h1.n + h2.m,
            p=h1.p + h2.q,
            q=h1.q + h2.p,
            upper=h1.upper[: h1.n] + mid_upper + h1.upper[h1.n :],
            lower=h1.lower[: h1.m] + mid_lower + h1.lower[h1.m :],
        )
    mid_upper = tuple((a + omega * A, lam * A) for a, A in h2.upper)
    mid_lower = tuple((b + omega * B, lam * B) for b, B in h2.lower)
    return FoxHParams(
        m=h1.m + h2.m,
        n=h1.n + h2.n,
        p=h1.p + h2.p,
        q=h1.q + h2.q,
        upper=h1.upper[: h1.n] + mid_upper + h1.upper[h1.n :],
        lower=h1.lower[: h1.m] + mid_lower + h1.lower[h1.m :],
    )
