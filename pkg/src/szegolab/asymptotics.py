"""Parameter schedules and convergence experiments for the contracted zeros.

A schedule n -> alpha_n controls how fast the parameter approaches the
degenerate set S_n; the induced level is r_eff = -log(dist)/n.  Reports
quantify how closely the computed zero counting measure follows mu_(r_eff):
level deviation, angular Kolmogorov-Smirnov distance against the uniform
law, harmonic moment gaps, and the two extremality gaps used as
convergence proxies.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import InvalidSchedule
from .laguerre import (
    LaguerreSpec,
    evaluate,
    evaluate_at_zero,
    param_decomposition,
    recommended_precision,
)
from .precision import default_precision, op_precision, workprec
from .rootfinding import ZeroSet, contracted_zeros
from .szego import phi_map, trace_level_curve

_SCHEDULE_KINDS = ("generic", "exponential", "superexponential")


def schedule_precision(n: int, dist_log2: float) -> int:
    """Working precision for degree n with dist(alpha, S_n) ~ 2^dist_log2.

    Vieta sums of the contracted zeros cancel down to the scale of dist, so
    resolving them needs the degree-driven budget plus ~1.5 bits per bit of
    smallness in dist.
    """
    extra = int(mp.ceil(mpf(3) / 2 * max(0.0, -dist_log2)))
    return default_precision(n) + 64 + extra


@dataclass(frozen=True)
class AlphaSchedule:
    """One of the three parameter schedules toward S_n."""

    kind: str
    c: mpf | None = None
    r: mpf | None = None

    def dist_log2(self, n: int) -> mpf:
        """log2 of dist(alpha_n, S_n), exact up to rounding."""
        with workprec(64):
            if self.kind == "generic":
                return mp.log(self.c, 2)
            if self.kind == "exponential":
                return -self.r * n / mp.log(2)
            return -mpf(n) ** 2 / mp.log(2)

    def precision_bits(self, n: int) -> int:
        return schedule_precision(n, float(self.dist_log2(n)))

    def alpha_at(self, n: int) -> mpf:
        """alpha_n at a precision that keeps dist fully resolved."""
        if not isinstance(n, int) or n < 1:
            raise InvalidSchedule(f"need positive int n, got {n}")
        prec = self.precision_bits(n)
        with workprec(prec):
            if self.kind == "generic":
                return -n - self.c
            if self.kind == "exponential":
                eps = mp.e ** (-self.r * n)
                if eps >= mpf(1) / 2:
                    raise InvalidSchedule(
                        f"exponential schedule needs e^(-r n) < 1/2; "
                        f"n = {n} is too small for r = {mp.nstr(self.r, 8)}"
                    )
                return -n + eps
            return -n + mp.e ** (-mpf(n) ** 2)

    def r_limit(self) -> mpf:
        if self.kind == "generic":
            return mpf(0)
        if self.kind == "exponential":
            return self.r
        return mp.inf


def make_schedule(kind: str, c=None, r=None) -> AlphaSchedule:
    """generic(c) with c in (0, 1/2]; exponential(r) with r >= 0;
    superexponential (no parameters)."""
    if kind not in _SCHEDULE_KINDS:
        raise InvalidSchedule(
            f"unknown schedule kind {kind!r}; expected one of {_SCHEDULE_KINDS}"
        )
    if kind == "generic":
        if c is None:
            raise InvalidSchedule("generic schedule needs parameter c")
        c = mpf(c) if not isinstance(c, mpf) else c
        if not (0 < c <= mpf(1) / 2):
            raise InvalidSchedule(f"need c in (0, 1/2], got {mp.nstr(c, 8)}")
        return AlphaSchedule(kind="generic", c=c)
    if kind == "exponential":
        if r is None:
            raise InvalidSchedule("exponential schedule needs parameter r")
        r = mpf(r) if not isinstance(r, mpf) else r
        if r < 0:
            raise InvalidSchedule(f"need r >= 0, got {mp.nstr(r, 8)}")
        return AlphaSchedule(kind="exponential", r=r)
    if c is not None or r is not None:
        raise InvalidSchedule("superexponential schedule takes no parameters")
    return AlphaSchedule(kind="superexponential")


@dataclass(frozen=True)
class ConvergenceReport:
    """Distance of the degree-n zero distribution from the mu_(r_eff) law."""

    n: int
    alpha: mpf
    r_eff: mpf
    level_deviation: mpf
    ks_theta: mpf
    moment_gaps: tuple
    supnorm_gap: mpf
    origin_gap: mpf


def _theta_of(z):
    theta = mp.arg(z * mp.e ** (1 - z))
    if theta < 0:
        theta += 2 * mp.pi
    return theta


def ks_uniform_theta(zeros, precision_bits: int = 128) -> mpf:
    """Kolmogorov-Smirnov distance of {arg phi(zeta_i)} from uniform [0, 2pi)."""
    prec = op_precision(precision_bits, *zeros)
    n = len(zeros)
    with workprec(prec):
        thetas = sorted(_theta_of(z) for z in zeros)
        two_pi = 2 * mp.pi
        d = mpf(0)
        for i, t in enumerate(thetas):
            f = t / two_pi
            d = max(d, abs(f - mpf(i) / n), abs(mpf(i + 1) / n - f))
        return d


def supnorm_extremality(
    n: int, alpha, r, M: int, precision_bits: int | None = None
) -> mpf:
    """max over Gamma_r samples of e^(-Re z) |L_n^(alpha)(n z)|^(1/n).

    The arc |theta| <= 2 pi / M around the positive crossing x0 is excluded:
    the underlying bound holds quasi-everywhere and genuinely fails at x0.
    """
    if precision_bits is None:
        precision_bits = recommended_precision(n, alpha)
    spec = LaguerreSpec.contracted(n, alpha)
    curve = trace_level_curve(r, M, min(precision_bits, 512))
    prec = op_precision(precision_bits, spec.alpha)
    with workprec(prec):
        best = mpf(0)
        m = len(curve.samples)
        for j, (_, z) in enumerate(curve.samples):
            if j in (0, 1, m - 1):
                continue
            val = mp.e ** (-mp.re(z)) * abs(evaluate(spec, z, precision_bits)) ** (
                mpf(1) / n
            )
            best = max(best, val)
        return best


def origin_extremality(n: int, alpha, precision_bits: int | None = None) -> mpf:
    """| |L_n^(alpha)(0)|^(1/n) - e^(-r_eff) |."""
    if precision_bits is None:
        precision_bits = recommended_precision(n, alpha)
    spec = LaguerreSpec(n, alpha, mpf(1))
    pd = param_decomposition(n, spec.alpha, precision_bits)
    with workprec(op_precision(precision_bits, spec.alpha)):
        value = abs(evaluate_at_zero(spec, precision_bits)) ** (mpf(1) / n)
        return abs(value - mp.e ** (-pd.r_eff))


def zero_distribution_report(
    n: int, alpha, M_curve: int = 512, precision_bits: int | None = None
) -> ConvergenceReport:
    """Full convergence diagnostics for the contracted zeros at (n, alpha)."""
    if precision_bits is None:
        precision_bits = recommended_precision(n, alpha)
    pd = param_decomposition(n, alpha, precision_bits)
    zs = contracted_zeros(n, alpha, precision_bits)
    prec = op_precision(precision_bits, pd.r_eff, *zs.zeros)
    with workprec(prec):
        level_dev = mpf(0)
        for z in zs.zeros:
            level_dev = max(level_dev, abs(mp.log(abs(z * mp.e ** (1 - z))) + pd.r_eff))
        moment_gaps = []
        for k in range(5):
            mean = mp.fsum((z**k for z in zs.zeros)) / n
            moment_gaps.append(abs(mean - (1 if k == 0 else 0)))
        ks = ks_uniform_theta(zs.zeros, precision_bits)
        sup_val = supnorm_extremality(n, alpha, pd.r_eff, M_curve, precision_bits)
        supnorm_gap = sup_val - mp.e ** (-pd.r_eff)
        origin_gap = origin_extremality(n, alpha, precision_bits)
    return ConvergenceReport(
        n=n,
        alpha=zs.spec.alpha if zs.spec is not None else alpha,
        r_eff=pd.r_eff,
        level_deviation=level_dev,
        ks_theta=ks,
        moment_gaps=tuple(moment_gaps),
        supnorm_gap=supnorm_gap,
        origin_gap=origin_gap,
    )


def level_median(zs: ZeroSet, precision_bits: int = 128) -> mpf:
    """Median over zeros of -log|phi(zeta)|, the observed level."""
    prec = op_precision(precision_bits, *zs.zeros)
    with workprec(prec):
        levels = sorted(-mp.log(abs(phi_map(z, precision_bits))) for z in zs.zeros)
        m = len(levels)
        if m % 2 == 1:
            return levels[m // 2]
        return (levels[m // 2 - 1] + levels[m // 2]) / 2
