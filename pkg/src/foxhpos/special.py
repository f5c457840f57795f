"""Wright, MacRobert E, and Meijer G views of H parameter sets.

The special-case types are recognition views: they extract the classical
parameters when the H pattern matches and can rebuild the exact H parameter
set. Evaluation always routes through the Mellin-Barnes evaluator on the
underlying H; the only direct summation here is the Wright series, kept as
an independent oracle for small arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .construct import ConvolutionSpec, build_foxh, ep_report
from .errors import DomainError, EpFailedError, NotMeijerPatternError
from .params import FoxHParams, Number, _ratio, _require_valid
from .rewrite import power_weight


@dataclass(frozen=True)
class WrightParams:
    """Wright generalized hypergeometric parameters (a_i, A_i); (b_j, B_j).

    The series is sum_k z^k/k! * prod Gamma(a_i + A_i k) / prod Gamma(b_j + B_j k);
    mu = sum B_j - sum A_i over these lists, and existence requires mu > -1.
    """

    upper: Tuple[Tuple[Number, Number], ...]
    lower: Tuple[Tuple[Number, Number], ...]
    mu: Number

    def to_foxh(self) -> FoxHParams:
        p = len(self.upper)
        return FoxHParams(
            m=1,
            n=p,
            p=p,
            q=len(self.lower) + 1,
            upper=tuple((1 - a, A) for a, A in self.upper),
            lower=((0, 1),) + tuple((1 - b, B) for b, B in self.lower),
        )


@dataclass(frozen=True)
class MacRobertParams:
    """MacRobert E-function parameters E[beta_1..beta_q; alpha_1..alpha_{p-1}; t]."""

    betas: Tuple[Number, ...]
    alphas: Tuple[Number, ...]

    def to_foxh(self) -> FoxHParams:
        q = len(self.betas)
        p = len(self.alphas) + 1
        return FoxHParams(
            m=q,
            n=1,
            p=p,
            q=q,
            upper=((1, 1),) + tuple((a, 1) for a in self.alphas),
            lower=tuple((b, 1) for b in self.betas),
        )


@dataclass(frozen=True)
class MeijerParams:
    """Meijer G parameters with the common slope lambda of the underlying H.

    The indices (m, n) are carried so the view can rebuild the H exactly;
    the numeric contract is G^{m,n}_{p,q}(t^{1/lambda}) = lambda * H(t).
    """

    m: int
    n: int
    alphas: Tuple[Number, ...]
    betas: Tuple[Number, ...]
    lam: Number

    def to_foxh(self) -> FoxHParams:
        return FoxHParams(
            m=self.m,
            n=self.n,
            p=len(self.alphas),
            q=len(self.betas),
            upper=tuple((a, self.lam) for a in self.alphas),
            lower=tuple((b, self.lam) for b in self.betas),
        )


def as_wright(h: FoxHParams) -> Optional[WrightParams]:
    """Recognize the Wright pattern: m = 1, n = p, lower starts with (0, 1).

    Maps upper (1-alpha_j, A_j) -> Wright upper (alpha_j, A_j) and the
    remaining lower (1-beta_j, B_j) -> Wright lower (beta_j, B_j). The
    H-function at argument t equals the Wright series at -t.
    """
    _require_valid(h)
    if h.m != 1 or h.n != h.p or h.q < 1:
        return None
    b0, B0 = h.lower[0]
    if not (b0 == 0 and B0 == 1):
        return None
    upper_w = tuple((1 - a, A) for a, A in h.upper)
    lower_w = tuple((1 - b, B) for b, B in h.lower[1:])
    mu = sum(B for _, B in lower_w) - sum(A for _, A in upper_w)
    return WrightParams(upper=upper_w, lower=lower_w, mu=mu)


def positive_wright(eta_list: Sequence[Tuple[Number, Number, Number]]) -> WrightParams:
    """Certified-positive Wright function from a list of eta kernels (a, v, w).

    Builds the spec {varphi: [(1, 0)], eta: eta_list}, certifies the e.p.
    conditions, and extracts the Wright view of the built H. The result is a
    pWp that is positive on the positive reals at argument -t, with mu = 0.
    """
    spec = ConvolutionSpec(varphi=((1, 0),), eta=tuple(tuple(e) for e in eta_list))
    rep = ep_report(spec)
    if not rep.ok:
        detail = "; ".join(msg for _, msg in rep.violations)
        raise EpFailedError(f"e.p. certification failed: {detail}")
    w = as_wright(build_foxh(spec))
    if w is None:
        raise EpFailedError("built parameter set does not match the Wright pattern")
    return w


def wright_series(w: WrightParams, z: float, stop_rel: float = 1e-16, max_terms: int = 600) -> float:
    """Direct power-series value of the Wright function at real z, |z| <= 10.

    Term-ratio stop at stop_rel. Requires all Gamma arguments a_i + A_i k and
    b_j + B_j k positive, which holds for the certified-positive family.
    """
    if abs(z) > 10:
        raise DomainError(f"series oracle restricted to |z| <= 10, got {z}")
    total = 0.0
    tail_small = 0
    for k in range(max_terms):
        lg = -math.lgamma(k + 1)
        for a, A in w.upper:
            arg = float(a) + float(A) * k
            if arg <= 0:
                raise DomainError("series oracle requires positive Gamma arguments")
            lg += math.lgamma(arg)
        for b, B in w.lower:
            arg = float(b) + float(B) * k
            if arg <= 0:
                raise DomainError("series oracle requires positive Gamma arguments")
            lg -= math.lgamma(arg)
        if z == 0:
            term = 1.0 if k == 0 else 0.0
        else:
            term = math.exp(lg + k * math.log(abs(z)))
            if z < 0 and k % 2:
                term = -term
        total += term
        if k > abs(z) and abs(term) <= stop_rel * max(1.0, abs(total)):
            tail_small += 1
            if tail_small >= 3:
                break
        else:
            tail_small = 0
    return total


def as_macrobert(h: FoxHParams) -> Optional[MacRobertParams]:
    """Recognize the MacRobert pattern: m = q, n = 1, unit slopes, upper starts (1, 1)."""
    _require_valid(h)
    if h.n != 1 or h.m != h.q or h.p < 1:
        return None
    if any(A != 1 for _, A in h.upper) or any(B != 1 for _, B in h.lower):
        return None
    a0, A0 = h.upper[0]
    if not (a0 == 1 and A0 == 1):
        return None
    return MacRobertParams(
        betas=tuple(b for b, _ in h.lower),
        alphas=tuple(a for a, _ in h.upper[1:]),
    )


def as_meijer(h: FoxHParams) -> Optional[MeijerParams]:
    """Recognize a common slope: all A_j = B_j = lambda > 0."""
    _require_valid(h)
    slopes = [A for _, A in h.upper] + [B for _, B in h.lower]
    if not slopes:
        return None
    lam = slopes[0]
    if any(s != lam for s in slopes[1:]) or not lam > 0:
        return None
    return MeijerParams(
        m=h.m,
        n=h.n,
        alphas=tuple(a for a, _ in h.upper),
        betas=tuple(b for b, _ in h.lower),
        lam=lam,
    )


def meijer_shift(h: FoxHParams, w: Number) -> MeijerParams:
    """Shift all Meijer parameters by the signed amount w.

    Realized through the power-weight identity on the underlying H with
    exponent w / lambda, so alpha_j -> alpha_j + w and beta_j -> beta_j + w;
    positivity on the positive reals transfers from a positive input for any
    real w.
    """
    mp = as_meijer(h)
    if mp is None:
        raise NotMeijerPatternError("parameter set has no common slope lambda")
    shifted = power_weight(h, _ratio(w, mp.lam))
    out = as_meijer(shifted)
    assert out is not None  # power_weight preserves slopes
    return out
