"""Build Fox H parameter sets from convolution specs and certify positivity.

A ConvolutionSpec lists the elementary kernels entering the Mellin
convolution f = varphi_1 v ... v eta_{n4}. The index/parameter mapping to an
H-function is

    m = n1 + n2 + n3,  n = n3 + n4,  p = n2 + n3 + n4,  q = n1 + n2 + n3 + n4
    upper = (1 - r_j, a''_j)_1^{n3}, (1 - v_j, a'''_j)_1^{n4}, (d_j, a'_j)_1^{n2}
    lower = (b_j, a_j)_1^{n1}, (c_j, a'_j)_1^{n2}, (o_j, a''_j)_1^{n3}, (1 - w_j, a'''_j)_1^{n4}

in exactly this block order. The e.p. (existence and positivity) conditions
are: the kernel constraint block, the index rule n1 >= 1 or n3 >= 1, and
pole separation of the built parameter set; under them H is positive on the
positive reals and coincides with f.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Tuple

from .errors import IndexRuleError, SpecInvalidError
from .kernels import Kernel, eta, kernel_mellin, phi, psi, varphi
from .params import (
    FoxHParams,
    MellinStrip,
    Number,
    _ratio,
    pole_separation,
)


@dataclass(frozen=True)
class ConvolutionSpec:
    """Kernel parameter lists; counts n1..n4 are the list lengths.

    varphi entries are (a, b); phi entries (a, c, d) with transform
    Gamma(a s + c)/Gamma(a s + d); psi entries (a, o, r); eta entries
    (a, v, w).
    """

    varphi: Tuple[Tuple[Number, Number], ...] = ()
    phi: Tuple[Tuple[Number, Number, Number], ...] = ()
    psi: Tuple[Tuple[Number, Number, Number], ...] = ()
    eta: Tuple[Tuple[Number, Number, Number], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "varphi", tuple(tuple(e) for e in self.varphi))
        object.__setattr__(self, "phi", tuple(tuple(e) for e in self.phi))
        object.__setattr__(self, "psi", tuple(tuple(e) for e in self.psi))
        object.__setattr__(self, "eta", tuple(tuple(e) for e in self.eta))

    @property
    def n1(self) -> int:
        return len(self.varphi)

    @property
    def n2(self) -> int:
        return len(self.phi)

    @property
    def n3(self) -> int:
        return len(self.psi)

    @property
    def n4(self) -> int:
        return len(self.eta)

    @property
    def kernel_count(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4


@dataclass(frozen=True)
class EpReport:
    """Existence-and-positivity certificate for a convolution spec."""

    ok: bool
    chi_prime: Number
    strip: MellinStrip
    violations: Tuple[Tuple[str, str], ...]
    pole_check_mode: str


def validate_spec(spec: ConvolutionSpec) -> List[Tuple[str, str]]:
    """Kernel constraint block; returns violations as (rule-id, message)."""
    v: List[Tuple[str, str]] = []
    for j, entry in enumerate(spec.varphi, 1):
        if len(entry) != 2:
            v.append(("varphi.arity", f"varphi entry {j} must be (a, b)"))
            continue
        a, b = entry
        if not a > 0:
            v.append(("varphi.a.positive", f"varphi {j}: a = {a} must be > 0"))
        if not b >= 0:
            v.append(("varphi.b.nonneg", f"varphi {j}: b = {b} must be >= 0"))
    for j, entry in enumerate(spec.phi, 1):
        if len(entry) != 3:
            v.append(("phi.arity", f"phi entry {j} must be (a, c, d)"))
            continue
        a, c, d = entry
        if not a > 0:
            v.append(("phi.a.positive", f"phi {j}: a = {a} must be > 0"))
        if not c >= 0:
            v.append(("phi.c.nonneg", f"phi {j}: c = {c} must be >= 0"))
        if not d >= c + 1:
            v.append(("phi.d.gap", f"phi {j}: d = {d} must be >= c+1"))
    for j, entry in enumerate(spec.psi, 1):
        if len(entry) != 3:
            v.append(("psi.arity", f"psi entry {j} must be (a, o, r)"))
            continue
        a, o, r = entry
        if not a > 0:
            v.append(("psi.a.positive", f"psi {j}: a = {a} must be > 0"))
        if not o >= 0:
            v.append(("psi.o.nonneg", f"psi {j}: o = {o} must be >= 0"))
        if not r > 0:
            v.append(("psi.r.positive", f"psi {j}: r = {r} must be > 0"))
    for j, entry in enumerate(spec.eta, 1):
        if len(entry) != 3:
            v.append(("eta.arity", f"eta entry {j} must be (a, v, w)"))
            continue
        a, vv, w = entry
        if not a > 0:
            v.append(("eta.a.positive", f"eta {j}: a = {a} must be > 0"))
        if not vv > 0:
            v.append(("eta.v.positive", f"eta {j}: v = {vv} must be > 0"))
        if not w >= vv + 1:
            v.append(("eta.w.gap", f"eta {j}: w = {w} must be >= v+1"))
    return v


def build_foxh(spec: ConvolutionSpec) -> FoxHParams:
    """Map a convolution spec to its H parameter set (block order fixed)."""
    bad = validate_spec(spec)
    if bad:
        raise SpecInvalidError("; ".join(msg for _, msg in bad))
    if spec.n1 == 0 and spec.n3 == 0:
        raise IndexRuleError("H-construction requires n1 >= 1 or n3 >= 1")
    upper = (
        tuple((1 - r, a) for a, o, r in spec.psi)
        + tuple((1 - v, a) for a, v, w in spec.eta)
        + tuple((d, a) for a, c, d in spec.phi)
    )
    lower = (
        tuple((b, a) for a, b in spec.varphi)
        + tuple((c, a) for a, c, d in spec.phi)
        + tuple((o, a) for a, o, r in spec.psi)
        + tuple((1 - w, a) for a, v, w in spec.eta)
    )
    return FoxHParams(
        m=spec.n1 + spec.n2 + spec.n3,
        n=spec.n3 + spec.n4,
        p=spec.n2 + spec.n3 + spec.n4,
        q=spec.kernel_count,
        upper=upper,
        lower=lower,
    )


def spec_strip(spec: ConvolutionSpec) -> MellinStrip:
    """Common strip (-xi, xi') of the kernel transforms; empty mins give infinities.

    xi  = min over {b/a, c/a', o/a''},  xi' = min over {r/a'', v/a'''}.
    """
    lower_ratios = (
        [_ratio(b, a) for a, b in spec.varphi]
        + [_ratio(c, a) for a, c, d in spec.phi]
        + [_ratio(o, a) for a, o, r in spec.psi]
    )
    upper_ratios = [_ratio(r, a) for a, o, r in spec.psi] + [
        _ratio(v, a) for a, v, w in spec.eta
    ]
    lo = -min(lower_ratios) if lower_ratios else -math.inf
    hi = min(upper_ratios) if upper_ratios else math.inf
    return MellinStrip(lo, hi)


def ep_report(spec: ConvolutionSpec) -> EpReport:
    """Run the e.p. checks in order; violations are data, not failures."""
    violations = list(validate_spec(spec))
    structurally_ok = not violations
    if spec.n1 == 0 and spec.n3 == 0:
        violations.append(("index.rule", "index rule n1 >= 1 or n3 >= 1"))
    chi_prime = sum(a for a, b in spec.varphi) + 2 * sum(a for a, o, r in spec.psi)
    strip = spec_strip(spec)
    if strip.is_empty:
        violations.append(("strip.nonempty", f"empty strip ({strip.lo}, {strip.hi})"))
    mode = "exact"
    if structurally_ok and not (spec.n1 == 0 and spec.n3 == 0):
        check = pole_separation(build_foxh(spec))
        mode = check.mode
        if not check.ok:
            violations.append(
                ("pole.separation", "upper and lower Gamma pole families collide")
            )
    ok = not violations and chi_prime > 0
    if not violations and not chi_prime > 0:
        violations.append(("chi.positive", f"chi' = {chi_prime} must be > 0"))
    return EpReport(
        ok=ok,
        chi_prime=chi_prime,
        strip=strip,
        violations=tuple(violations),
        pole_check_mode=mode,
    )


def spec_kernels(spec: ConvolutionSpec) -> List[Kernel]:
    """Kernel objects in block order (varphi, phi, psi, eta)."""
    bad = validate_spec(spec)
    if bad:
        raise SpecInvalidError("; ".join(msg for _, msg in bad))
    out: List[Kernel] = []
    out += [varphi(a, b) for a, b in spec.varphi]
    out += [phi(a, c, d) for a, c, d in spec.phi]
    out += [psi(a, o, r) for a, o, r in spec.psi]
    out += [eta(a, v, w) for a, v, w in spec.eta]
    return out


def spec_mellin(spec: ConvolutionSpec, s: complex) -> complex:
    """Product of the exact kernel Mellin transforms at s (the transform of f)."""
    out = complex(1.0)
    for k in spec_kernels(spec):
        out *= kernel_mellin(k, s)
    return out
