"""Fox H parameter sets: structural validation, characteristic parameters,
pole separation, and Mellin strips.

A parameter set carries the indices (m, n, p, q) together with the upper
pairs (alpha_j, A_j), j = 1..p, and lower pairs (beta_j, B_j), j = 1..q.
The Mellin kernel built from it is

    Xi(s) = prod_{j<=m} Gamma(beta_j + B_j s) * prod_{j<=n} Gamma(1 - alpha_j - A_j s)
            / prod_{j>m} Gamma(1 - beta_j - B_j s) / prod_{j>n} Gamma(alpha_j + A_j s)

and the H-function is its inverse Mellin transform. Coefficients may be
floats or exact rationals (fractions.Fraction); rational inputs keep the
pole-separation decision and strip arithmetic exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Tuple, Union

from .errors import EmptyStripError, InvalidParamsError

Number = Union[int, float, Fraction]
Pair = Tuple[Number, Number]

_POLE_SCAN_LIMIT = 1000
_POLE_SCAN_TOL = 1e-12


def _is_finite_real(x) -> bool:
    if isinstance(x, bool) or isinstance(x, complex):
        return False
    if isinstance(x, float):
        return math.isfinite(x)
    return isinstance(x, Rational)


def _ratio(x: Number, y: Number) -> Number:
    """x / y, exact when both operands are rational."""
    if isinstance(x, Rational) and isinstance(y, Rational):
        return Fraction(x) / Fraction(y)
    return x / y


@dataclass(frozen=True)
class FoxHParams:
    """Indices (m, n, p, q) plus upper pairs (alpha_j, A_j) and lower pairs (beta_j, B_j)."""

    m: int
    n: int
    p: int
    q: int
    upper: Tuple[Pair, ...] = ()
    lower: Tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple((a, A) for a, A in self.upper))
        object.__setattr__(self, "lower", tuple((b, B) for b, B in self.lower))


@dataclass(frozen=True)
class CharParams:
    """Characteristic parameters chi, mu, delta, kappa of a parameter set."""

    chi: Number
    mu: Number
    delta: Number
    kappa: float


@dataclass(frozen=True)
class MellinStrip:
    """Open interval (lo, hi) of admissible Re(s); endpoints may be -inf / +inf."""

    lo: Number
    hi: Number

    @property
    def is_empty(self) -> bool:
        return not self.lo < self.hi

    def contains(self, x: Number) -> bool:
        return self.lo < x < self.hi

    def as_floats(self) -> Tuple[float, float]:
        return float(self.lo), float(self.hi)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: Tuple[Tuple[str, str], ...] = ()


@dataclass(frozen=True)
class PoleCheck:
    """Outcome of the pole-separation decision.

    mode is "exact" when all coefficients were rational and the disjointness
    of the two pole progressions was decided by integer arithmetic, "bounded"
    when any coefficient was a float and a finite scan (l, l' <= 1000 with
    clash tolerance 1e-12) was used instead.
    """

    ok: bool
    mode: str


def validate_params(h: FoxHParams) -> ValidationReport:
    """Structural check: list lengths, index bounds, positivity of the slopes."""
    v = []
    for name in ("m", "n", "p", "q"):
        if not isinstance(getattr(h, name), int) or isinstance(getattr(h, name), bool):
            v.append((f"idx.{name}.int", f"{name} must be a nonnegative integer"))
    if not v:
        if len(h.upper) != h.p:
            v.append(("len.upper", f"upper has {len(h.upper)} pairs, expected p={h.p}"))
        if len(h.lower) != h.q:
            v.append(("len.lower", f"lower has {len(h.lower)} pairs, expected q={h.q}"))
        if not 0 <= h.n <= h.p:
            v.append(("idx.n", f"0 <= n <= p violated (n={h.n}, p={h.p})"))
        if not 0 <= h.m <= h.q:
            v.append(("idx.m", f"0 <= m <= q violated (m={h.m}, q={h.q})"))
    for j, (alpha, A) in enumerate(h.upper, 1):
        if not (_is_finite_real(alpha) and _is_finite_real(A)):
            v.append(("real", f"upper pair {j} is not finite real"))
        elif not A > 0:
            v.append(("A.positive", f"A_{j} = {A} must be > 0"))
    for j, (beta, B) in enumerate(h.lower, 1):
        if not (_is_finite_real(beta) and _is_finite_real(B)):
            v.append(("real", f"lower pair {j} is not finite real"))
        elif not B > 0:
            v.append(("B.positive", f"B_{j} = {B} must be > 0"))
    return ValidationReport(ok=not v, violations=tuple(v))


def _require_valid(h: FoxHParams) -> None:
    rep = validate_params(h)
    if not rep.ok:
        raise InvalidParamsError("; ".join(msg for _, msg in rep.violations))


def char_params(h: FoxHParams, kappa_mode: str = "printed") -> CharParams:
    """Characteristic parameters of a valid parameter set.

    chi   = sum_{j<=n} A_j - sum_{j>n} A_j + sum_{j<=m} B_j - sum_{j>m} B_j
    mu    = sum B_j - sum A_j
    delta = sum beta_j - sum alpha_j + (p - q)/2
    kappa = prod_{j<=n} A_j^{-A_j} * prod_{j<=n} B_j^{B_j}          (mode "printed")
          = prod_{j<=p} A_j^{-A_j} * prod_{j<=q} B_j^{B_j}          (mode "conventional")

    The "printed" kappa runs both products over j = 1..n; indices past the end
    of the B list are skipped. Empty products are unity. Sums over rational
    coefficients stay exact.
    """
    _require_valid(h)
    if kappa_mode not in ("printed", "conventional"):
        raise ValueError(f"unknown kappa_mode {kappa_mode!r}")
    A = [x for _, x in h.upper]
    alphas = [x for x, _ in h.upper]
    B = [x for _, x in h.lower]
    betas = [x for x, _ in h.lower]
    chi = sum(A[: h.n]) - sum(A[h.n :]) + sum(B[: h.m]) - sum(B[h.m :])
    mu = sum(B) - sum(A)
    delta = sum(betas) - sum(alphas) + Fraction(h.p - h.q, 2)
    if kappa_mode == "printed":
        a_fac = A[: h.n]
        b_fac = B[: h.n]
    else:
        a_fac = A
        b_fac = B
    log_kappa = -sum(float(x) * math.log(float(x)) for x in a_fac)
    log_kappa += sum(float(x) * math.log(float(x)) for x in b_fac)
    return CharParams(chi=chi, mu=mu, delta=delta, kappa=math.exp(log_kappa))


def _ext_gcd(a: int, b: int) -> Tuple[int, int]:
    """Bezout coefficients (x, y) with a*x + b*y = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return x0, y0


def _clash_exact(A: Fraction, alpha: Fraction, B: Fraction, beta: Fraction) -> bool:
    """Decide whether A*(l + beta) = B*(alpha - l' - 1) has a solution l, l' in N0.

    Rewrites the clash as A*l + B*l' = B*(alpha - 1) - A*beta and solves the
    linear Diophantine equation over nonnegative integers exactly.
    """
    c = B * (alpha - 1) - A * beta
    den = A.denominator
    den = den * B.denominator // gcd(den, B.denominator)
    den = den * c.denominator // gcd(den, c.denominator)
    a = int(A * den)
    b = int(B * den)
    rhs = c * den
    if rhs.denominator != 1:
        return False
    N = int(rhs)
    if N < 0:
        return False
    g = gcd(a, b)
    if N % g:
        return False
    x0, y0 = _ext_gcd(a, b)
    f = N // g
    l0, lp0 = x0 * f, y0 * f
    step_l, step_lp = b // g, a // g
    k_min = -(l0 // step_l)        # ceil(-l0 / step_l)
    k_max = lp0 // step_lp         # floor(lp0 / step_lp)
    return k_min <= k_max


def _clash_bounded(A, alpha, B, beta, limit: int, tol: float) -> bool:
    A, alpha, B, beta = float(A), float(alpha), float(B), float(beta)
    for l in range(limit + 1):
        lp = alpha - 1 - A * (l + beta) / B
        if lp < -tol:
            break  # decreasing in l, no further solutions
        r = round(lp)
        if 0 <= r <= limit and abs(lp - r) <= tol:
            return True
    return False


def pole_separation(h: FoxHParams) -> PoleCheck:
    """Check that the poles of the numerator Gamma families are disjoint.

    The upper family Gamma(1 - alpha_j - A_j s), j <= n, has poles at
    s = (1 - alpha_j + l')/A_j; the lower family Gamma(beta_j' + B_j' s),
    j' <= m, at s = -(beta_j' + l)/B_j'. Vacuously separated when m = 0
    or n = 0.
    """
    _require_valid(h)
    relevant = [h.upper[j] for j in range(h.n)] + [h.lower[j] for j in range(h.m)]
    exact = all(
        isinstance(x, Rational) and isinstance(y, Rational) for x, y in relevant
    )
    mode = "exact" if exact else "bounded"
    for j in range(h.n):
        alpha, A = h.upper[j]
        for jp in range(h.m):
            beta, B = h.lower[jp]
            if exact:
                clash = _clash_exact(
                    Fraction(A), Fraction(alpha), Fraction(B), Fraction(beta)
                )
            else:
                clash = _clash_bounded(
                    A, alpha, B, beta, _POLE_SCAN_LIMIT, _POLE_SCAN_TOL
                )
            if clash:
                return PoleCheck(ok=False, mode=mode)
    return PoleCheck(ok=True, mode=mode)


def pole_separation_ok(h: FoxHParams) -> bool:
    return pole_separation(h).ok


def strip_endpoints(h: FoxHParams) -> Tuple[Number, Number]:
    """Endpoints of the Mellin strip, without requiring nonemptiness.

    lo = -min_{j<=m} beta_j / B_j (-inf when m = 0),
    hi =  min_{j<=n} (1 - alpha_j) / A_j (+inf when n = 0).
    """
    if h.m == 0:
        lo: Number = -math.inf
    else:
        lo = -min(_ratio(b, B) for b, B in h.lower[: h.m])
    if h.n == 0:
        hi: Number = math.inf
    else:
        hi = min(_ratio(1 - a, A) for a, A in h.upper[: h.n])
    return lo, hi


def mellin_strip(h: FoxHParams) -> MellinStrip:
    """Admissible strip of Re(s) for the Mellin transform of H.

    Raises EmptyStripError when lo >= hi.
    """
    _require_valid(h)
    lo, hi = strip_endpoints(h)
    if not lo < hi:
        raise EmptyStripError(f"empty Mellin strip: lo={lo} >= hi={hi}")
    return MellinStrip(lo, hi)
