"""Seeded random generation of e.p.-valid convolution specs.

Kernel counts satisfy n1+n2+n3+n4 <= max_kernels; a-type parameters are
log-uniform in [0.25, 4], the b/o/c/v-type offsets uniform in [0, 3], and
the gap constraints d >= c+1, w >= v+1 hold by construction. Draws are
quantized to three decimals and kept as exact rationals, so pole-separation
and strip arithmetic on generated specs are exact. Specs failing ep_report
or with a Mellin strip narrower than min_strip_width are rejected and
redrawn, which keeps contours clear of strip-edge poles and oracle tails
integrable.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, List, Optional

from .construct import ConvolutionSpec, EpReport, ep_report

_A_LO, _A_HI = 0.25, 4.0
_OFFSET_HI = 3.0
_GAP_EXTRA = 2.0


def _q3(x: float) -> Fraction:
    return Fraction(round(x, 3)).limit_denominator(10**6)


def _draw_a(rng: random.Random) -> Fraction:
    x = math.exp(rng.uniform(math.log(_A_LO), math.log(_A_HI)))
    v = _q3(x)
    return v if v > 0 else Fraction(1, 4)


def _draw_offset(rng: random.Random, positive: bool = False) -> Fraction:
    v = _q3(rng.uniform(0.0, _OFFSET_HI))
    if positive:
        while not v > 0:
            v = _q3(rng.uniform(0.1, _OFFSET_HI))
    return v


def _draw_spec(rng: random.Random, max_kernels: int) -> ConvolutionSpec:
    while True:
        total = rng.randint(1, max_kernels)
        counts = [0, 0, 0, 0]
        for _ in range(total):
            counts[rng.randrange(4)] += 1
        if counts[0] >= 1 or counts[2] >= 1:
            break
    varphi = tuple((_draw_a(rng), _draw_offset(rng)) for _ in range(counts[0]))
    phi = []
    for _ in range(counts[1]):
        c = _draw_offset(rng)
        d = c + 1 + _q3(rng.uniform(0.0, _GAP_EXTRA))
        phi.append((_draw_a(rng), c, d))
    psi = tuple(
        (_draw_a(rng), _draw_offset(rng), _draw_offset(rng, positive=True))
        for _ in range(counts[2])
    )
    eta = []
    for _ in range(counts[3]):
        v = _draw_offset(rng, positive=True)
        w = v + 1 + _q3(rng.uniform(0.0, _GAP_EXTRA))
        eta.append((_draw_a(rng), v, w))
    return ConvolutionSpec(varphi=varphi, phi=tuple(phi), psi=psi, eta=tuple(eta))


def generate_specs(
    seed: int,
    count: int,
    max_kernels: int = 4,
    min_strip_width: float = 0.05,
    predicate: Optional[Callable[[ConvolutionSpec, EpReport], bool]] = None,
) -> List[ConvolutionSpec]:
    """Deterministic list of e.p.-valid specs for the given seed.

    predicate(spec, report) may impose extra eligibility (e.g. built indices
    with m*n > 0 for transform tests); rejected draws are simply redrawn.
    """
    rng = random.Random(seed)
    out: List[ConvolutionSpec] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * max(count, 1):
            raise RuntimeError("corpus generation rejection rate too high")
        spec = _draw_spec(rng, max_kernels)
        rep = ep_report(spec)
        if not rep.ok:
            continue
        width = float(rep.strip.hi) - float(rep.strip.lo)
        if not width >= min_strip_width:
            continue
        if predicate is not None and not predicate(spec, rep):
            continue
        out.append(spec)
    return out
