"""The four elementary kernels built from stretched exponentials and power laws.

    varphi_{a,b}(t) = t^{b/a} exp(-t^{1/a}) / a                          on (0, inf)
    phi_{a,b,c}(t)  = t^{b/a} (1 - t^{1/a})^{c-b-1} / (a Gamma(c-b))     on (0, 1), 0 elsewhere
    psi_{a,b,c}(t)  = Gamma(b+c) t^{b/a} (1 + t^{1/a})^{-b-c} / a        on (0, inf)
    eta_{a,b,c}(t)  = t^{(1-c)/a} (t^{1/a} - 1)^{c-b-1} / (a Gamma(c-b)) on (1, inf), 0 elsewhere

Each kernel has a closed-form Mellin transform (a ratio of Gamma factors)
valid on an explicit vertical strip; the transforms are evaluated in the
log-Gamma domain. t^{1/a} is always computed as exp(ln(t)/a) so precision
stays uniform across a, and the full pointwise formula is assembled in log
space before a single exponentiation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from scipy.special import loggamma as _loggamma

from .errors import DomainError, InvalidKernelError, OutOfStripError
from .params import MellinStrip, Number

SUPPORT_ALL: Tuple[float, float] = (0.0, math.inf)
SUPPORT_UNIT: Tuple[float, float] = (0.0, 1.0)
SUPPORT_TAIL: Tuple[float, float] = (1.0, math.inf)


class KernelKind(Enum):
    VARPHI = "varphi"
    PHI = "phi"
    PSI = "psi"
    ETA = "eta"


@dataclass(frozen=True)
class Kernel:
    """One elementary kernel; c is unused for the VARPHI family."""

    kind: KernelKind
    a: Number
    b: Number
    c: Number | None = None

    def __post_init__(self):
        k, a, b, c = self.kind, self.a, self.b, self.c
        if not a > 0:
            raise InvalidKernelError(f"{k.value}: a = {a} must be > 0")
        if k is KernelKind.VARPHI:
            if not b >= 0:
                raise InvalidKernelError(f"varphi: b = {b} must be >= 0")
        elif k is KernelKind.PHI:
            if not b >= 0:
                raise InvalidKernelError(f"phi: b = {b} must be >= 0")
            if c is None or not c >= b + 1:
                raise InvalidKernelError(f"phi: c = {c} must be >= b+1 = {b}+1")
        elif k is KernelKind.PSI:
            if not b >= 0:
                raise InvalidKernelError(f"psi: b = {b} must be >= 0")
            if c is None or not c > 0:
                raise InvalidKernelError(f"psi: c = {c} must be > 0")
        elif k is KernelKind.ETA:
            if not b > 0:
                raise InvalidKernelError(f"eta: b = {b} must be > 0")
            if c is None or not c >= b + 1:
                raise InvalidKernelError(f"eta: c = {c} must be >= b+1 = {b}+1")


def varphi(a, b) -> Kernel:
    return Kernel(KernelKind.VARPHI, a, b)


def phi(a, b, c) -> Kernel:
    return Kernel(KernelKind.PHI, a, b, c)


def psi(a, b, c) -> Kernel:
    return Kernel(KernelKind.PSI, a, b, c)


def eta(a, b, c) -> Kernel:
    return Kernel(KernelKind.ETA, a, b, c)


def kernel_support(k: Kernel) -> Tuple[float, float]:
    """Open support of the kernel: (0,1) for PHI, (1,inf) for ETA, (0,inf) otherwise."""
    if k.kind is KernelKind.PHI:
        return SUPPORT_UNIT
    if k.kind is KernelKind.ETA:
        return SUPPORT_TAIL
    return SUPPORT_ALL


def kernel_eval(k: Kernel, t: float) -> float:
    """Pointwise value; exact formula, nonnegative on (0, inf)."""
    if not t > 0:
        raise DomainError(f"kernel argument t = {t} must be > 0")
    a, b, c = float(k.a), float(k.b), float(k.c) if k.c is not None else 0.0
    lt = math.log(t)
    if k.kind is KernelKind.VARPHI:
        u = math.exp(lt / a)
        return math.exp((b / a) * lt - u) / a
    if k.kind is KernelKind.PHI:
        if t >= 1:
            return 0.0
        one_minus_u = -math.expm1(lt / a)  # 1 - t^(1/a), accurate near t -> 1
        return (
            math.exp((b / a) * lt) * one_minus_u ** (c - b - 1)
            / (a * math.gamma(c - b))
        )
    if k.kind is KernelKind.PSI:
        u = math.exp(lt / a)
        return math.gamma(b + c) / a * math.exp((b / a) * lt - (b + c) * math.log1p(u))
    # ETA
    if t <= 1:
        return 0.0
    u_minus_one = math.expm1(lt / a)  # t^(1/a) - 1, accurate near t -> 1
    return (
        math.exp(((1 - c) / a) * lt) * u_minus_one ** (c - b - 1)
        / (a * math.gamma(c - b))
    )


def kernel_strip(k: Kernel) -> MellinStrip:
    """Admissible strip of Re(s) for the kernel's Mellin transform."""
    from .params import _ratio

    a, b, c = k.a, k.b, k.c
    if k.kind in (KernelKind.VARPHI, KernelKind.PHI):
        return MellinStrip(-_ratio(b, a), math.inf)
    if k.kind is KernelKind.PSI:
        return MellinStrip(-_ratio(b, a), _ratio(c, a))
    return MellinStrip(-math.inf, _ratio(b, a))


def kernel_mellin(k: Kernel, s: complex) -> complex:
    """Exact Mellin transform at s, assembled from log-Gamma factors.

    varphi -> Gamma(a s + b)
    phi    -> Gamma(a s + b) / Gamma(a s + c)
    psi    -> Gamma(a s + b) Gamma(c - a s)
    eta    -> Gamma(b - a s) / Gamma(c - a s)

    Raises OutOfStripError when Re(s) lies outside kernel_strip(k).
    """
    strip = kernel_strip(k)
    s = complex(s)
    if not strip.contains(s.real):
        raise OutOfStripError(
            f"Re(s) = {s.real} outside strip ({float(strip.lo)}, {float(strip.hi)})"
        )
    a, b, c = float(k.a), float(k.b), float(k.c) if k.c is not None else 0.0
    if k.kind is KernelKind.VARPHI:
        lg = _loggamma(a * s + b)
    elif k.kind is KernelKind.PHI:
        lg = _loggamma(a * s + b) - _loggamma(a * s + c)
    elif k.kind is KernelKind.PSI:
        lg = _loggamma(a * s + b) + _loggamma(c - a * s)
    else:
        lg = _loggamma(b - a * s) - _loggamma(c - a * s)
    return cmath.exp(complex(lg))
