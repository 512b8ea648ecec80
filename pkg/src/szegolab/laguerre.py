"""Laguerre polynomials L_n^(a) with arbitrary real parameter.

Everything here works for parameters far outside the classical range
a > -1, in particular for a near the degenerate set S_n = {-n, ..., -1}
where the polynomial acquires a multiple zero at the origin.  Two
evaluation paths are provided: the three-term recurrence (stable, used for
point evaluation) and explicit coefficients (used only to feed the root
finder).  Generalized binomials are always accumulated as plain products,
never as Gamma ratios, so negative integer parameters are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import DegenerateParameter, InvalidParameter
from .precision import (
    default_precision,
    mantissa_bits,
    op_precision,
    workprec,
)


def _as_scalar(x, what: str):
    """Coerce int/float/mpf to mpf without re-rounding an existing mpf.

    Strings are rejected: parsing a decimal literal needs an explicit
    precision choice, which is what precision.ap_real is for.
    """
    if isinstance(x, mpf):
        return x
    if isinstance(x, bool) or isinstance(x, str):
        raise InvalidParameter(f"{what} must be numeric; build strings via ap_real")
    if isinstance(x, int):
        with mp.workprec(max(64, x.bit_length() + 1)):
            return mpf(x)
    if isinstance(x, float):
        with mp.workprec(64):
            return mpf(x)
    raise InvalidParameter(f"unsupported type for {what}: {type(x).__name__}")


@dataclass(frozen=True)
class LaguerreSpec:
    """Degree, parameter, and contraction scale of L_n^(alpha)(scale*z)."""

    n: int
    alpha: mpf
    scale: mpf

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParameter(f"degree n must be a positive int, got {self.n}")
        object.__setattr__(self, "alpha", _as_scalar(self.alpha, "alpha"))
        object.__setattr__(self, "scale", _as_scalar(self.scale, "scale"))
        if not (self.scale > 0):
            raise InvalidParameter(f"scale must be positive, got {self.scale}")

    @classmethod
    def contracted(cls, n: int, alpha) -> "LaguerreSpec":
        """Spec for L_n^(alpha)(n z), the contraction used throughout."""
        return cls(n, alpha, _as_scalar(n, "scale"))


@dataclass(frozen=True)
class CoeffList:
    """Ascending-degree coefficients; monic lists end in an exact 1."""

    coeffs: tuple
    monic_flag: bool
    spec: LaguerreSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise InvalidParameter("empty coefficient list")
        if self.monic_flag and self.coeffs[-1] != 1:
            raise InvalidParameter(
                f"monic_flag set but leading coefficient is {self.coeffs[-1]}"
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class ParamDecomposition:
    """Position of alpha relative to the degenerate set S_n = {-n..-1}.

    alpha = -k_n - delta_n with k_n = min(floor(-alpha), n); dist is the
    distance from alpha to S_n, attained at -h_n; r_eff = -log(dist)/n is
    the finite-n level (dist^(1/n) = e^(-r_eff)).
    """

    dist: mpf
    h_n: int
    k_n: int
    delta_n: mpf
    r_eff: mpf


def _binomial_products(n: int, alpha):
    """Return [binom(n+alpha, m) for m = 0..n] at the ambient precision.

    binom(n+alpha, m) = prod_{i=n-m+1..n} (alpha+i) / m!.  Numerator and
    denominator are accumulated separately so that integer alpha gives
    exact integer ratios (no per-factor rounding).
    """
    out = [mpf(1)]
    num = mpf(1)
    den = mpf(1)
    for m in range(1, n + 1):
        num = num * (alpha + (n - m + 1))
        den = den * m
        out.append(num / den)
    return out


def coefficients(spec: LaguerreSpec, precision_bits: int) -> CoeffList:
    """Coefficients of L_n^(alpha)(scale*z), ascending degree.

    coeffs[k] = binom(n+alpha, n-k) * (-scale)^k / k!.
    """
    n = spec.n
    prec = op_precision(precision_bits, spec.alpha, spec.scale)
    with workprec(prec):
        binom = _binomial_products(n, spec.alpha)
        coeffs = []
        pow_ns = mpf(1)
        fact = mpf(1)
        neg_scale = -spec.scale
        for k in range(n + 1):
            if k > 0:
                pow_ns = pow_ns * neg_scale
                fact = fact * k
            coeffs.append(binom[n - k] * pow_ns / fact)
    return CoeffList(tuple(coeffs), monic_flag=False, spec=spec)


def monic_rescaled(spec: LaguerreSpec, precision_bits: int | None = None) -> CoeffList:
    """Monic coefficients of p_n(z) = L_n^(alpha)(n z) / l_n, l_n = (-1)^n n^n/n!.

    Requires scale = n.  coeffs[k] = (-1)^(n-k) binom(n+alpha, n-k) n!/(k! n^(n-k)),
    with the leading coefficient exactly 1.
    """
    n = spec.n
    if spec.scale != n:
        raise InvalidParameter(
            f"monic_rescaled requires scale = n, got scale={spec.scale}, n={n}"
        )
    if precision_bits is None:
        precision_bits = default_precision(n)
    prec = op_precision(precision_bits, spec.alpha)
    with workprec(prec):
        binom = _binomial_products(n, spec.alpha)
        coeffs = [mpf(0)] * (n + 1)
        coeffs[n] = mpf(1)
        # ratio_k = n! / (k! n^(n-k)), built downward from ratio_n = 1.
        ratio = mpf(1)
        sign = 1
        for k in range(n - 1, -1, -1):
            ratio = ratio * (k + 1) / n
            sign = -sign
            coeffs[k] = sign * binom[n - k] * ratio
    return CoeffList(tuple(coeffs), monic_flag=True, spec=spec)


def _recurrence(n: int, alpha, w):
    """L_n^(alpha)(w) by the three-term recurrence; handles n = 0."""
    if n == 0:
        return mpf(1)
    prev = mpf(1)
    cur = 1 + alpha - w
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - w) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def evaluate(spec: LaguerreSpec, z, precision_bits: int | None = None):
    """L_n^(alpha)(scale*z) via the stable three-term recurrence."""
    if precision_bits is None:
        precision_bits = default_precision(spec.n)
    prec = op_precision(precision_bits, spec.alpha, spec.scale, z)
    with workprec(prec):
        w = spec.scale * (mpc(z) if isinstance(z, (complex, mpc)) else mpf(z))
        return _recurrence(spec.n, spec.alpha, w)


def evaluate_at_zero(spec: LaguerreSpec, precision_bits: int | None = None) -> mpf:
    """L_n^(alpha)(0) = binom(n+alpha, n) = prod_{k=1..n} (alpha+k)/k.

    Exactly zero iff alpha is an integer in {-1, ..., -n}.
    """
    if precision_bits is None:
        precision_bits = default_precision(spec.n)
    prec = op_precision(precision_bits, spec.alpha)
    with workprec(prec):
        num = mpf(1)
        for k in range(1, spec.n + 1):
            num = num * (spec.alpha + k)
        return num / mp.factorial(spec.n)


def param_decomposition(
    n: int, alpha, precision_bits: int | None = None
) -> ParamDecomposition:
    """Decompose alpha against S_n = {-n, ..., -1}.

    dist = delta_n when alpha < -n, min(delta_n, 1-delta_n) when
    -n < alpha < -1; ties at half-integers resolve toward the element of
    smaller modulus.  alpha in S_n (exactly, at working precision) is
    degenerate and rejected.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"degree n must be a positive int, got {n}")
    alpha = _as_scalar(alpha, "alpha")
    if precision_bits is None:
        precision_bits = default_precision(n)
    prec = op_precision(precision_bits, alpha)
    with workprec(prec):
        k_n = min(int(mp.floor(-alpha)), n)
        delta = -alpha - k_n
        if alpha >= -1:
            h_n = 1
            dist = abs(alpha + 1)
        elif alpha < -n:
            h_n = n
            dist = -alpha - n
        else:
            # -n <= alpha < -1, so 1 <= k_n <= n and 0 <= delta < 1.
            if delta == 0:
                raise DegenerateParameter(
                    f"alpha = {alpha} lies in S_{n} = {{-{n}, ..., -1}}"
                )
            if delta <= mpf(1) / 2:
                h_n = k_n
                dist = delta
            else:
                h_n = k_n + 1
                dist = 1 - delta
        if dist == 0:
            raise DegenerateParameter(
                f"alpha = {alpha} is at zero distance from S_{n} "
                f"at {prec}-bit precision"
            )
        r_eff = -mp.log(dist) / n
    return ParamDecomposition(dist=dist, h_n=h_n, k_n=k_n, delta_n=delta, r_eff=r_eff)


def recommended_precision(n: int, alpha) -> int:
    """Degree- and distance-aware default precision for L_n^(alpha)(n z) work.

    Near-degenerate parameters make the Vieta sums of the contracted zeros
    cancel down to the scale of dist(alpha, S_n), so ~1.5 bits per bit of
    smallness in dist are added on top of the degree-driven budget.
    """
    a = _as_scalar(alpha, "alpha")
    bits = default_precision(n) + 64
    try:
        pd = param_decomposition(n, a, default_precision(n))
        if pd.dist < 1:
            bits += int(mp.ceil(mpf(3) / 2 * (-mp.log(pd.dist, 2))))
    except DegenerateParameter:
        pass  # exact degenerate alpha: handled exactly by root deflation
    return max(bits, mantissa_bits(a) + 64)


@dataclass(frozen=True)
class AskeyResult:
    """Both sides of the integral representation check; iterates as
    (lhs, rhs, abs_error) so it unpacks like the documented triple."""

    lhs: mpf
    rhs: mpf
    abs_error: mpf
    tail_bound: mpf

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.abs_error))


def askey_check(
    n: int,
    alpha,
    beta,
    x,
    quad_nodes: int = 64,
    precision_bits: int | None = None,
) -> AskeyResult:
    """Check e^(-x) L_n^(a)(x) = (1/Gamma(b-a)) int_x^inf (t-x)^(b-a-1) e^(-t) L_n^(b)(t) dt.

    The integral is split at t = x+1.  On [x, x+1] the substitution
    u = (t-x)^(b-a) absorbs the algebraic singularity, leaving
    (1/(b-a)) int_0^1 e^(-t(u)) L_n^(b)(t(u)) du with t(u) = x + u^(1/(b-a)),
    handled by tanh-sinh quadrature.  Beyond x+1 Gauss-Legendre panels run
    to T = x + 40 + 4n and the remainder is bounded by an incomplete-Gamma
    envelope of the integrand (reported, not asserted).
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f"degree n must be a nonnegative int, got {n}")
    alpha = _as_scalar(alpha, "alpha")
    beta = _as_scalar(beta, "beta")
    x = _as_scalar(x, "x")
    if not (beta > alpha):
        raise InvalidParameter(f"need beta > alpha, got beta={beta}, alpha={alpha}")
    if x < 0:
        raise InvalidParameter(f"need x >= 0, got {x}")
    if quad_nodes < 4:
        raise InvalidParameter(f"quad_nodes too small: {quad_nodes}")
    if precision_bits is None:
        precision_bits = max(192, default_precision(max(n, 1)))
    prec = op_precision(precision_bits, alpha, beta, x)
    with workprec(prec + 32):
        s = beta - alpha
        lhs = mp.e ** (-x) * _recurrence(n, alpha, x)

        def integrand(t):
            return (t - x) ** (s - 1) * mp.e ** (-t) * _recurrence(n, beta, t)

        def near(u):
            t = x + u ** (1 / s)
            return mp.e ** (-t) * _recurrence(n, beta, t)

        maxdegree = max(8, int(math.log2(quad_nodes)) + 3)
        i_near = mp.quad(near, [0, 1], maxdegree=maxdegree) / s

        big_t = x + 40 + 4 * n
        panels = [x + 1]
        step = mpf(4)
        while panels[-1] + step < big_t:
            panels.append(panels[-1] + step)
        panels.append(big_t)
        i_far = mp.quad(
            integrand, panels, maxdegree=maxdegree, method="gauss-legendre"
        )

        # Tail envelope: |L_n^(b)(t)| <= (sum_k |c_k|) t^n for t >= 1, and
        # (t-x)^(s-1) <= (T-x)^(s-1) for s < 1, <= t^(ceil(s)-1) otherwise.
        coeff_sum = mp.fsum(
            abs(c)
            for c in coefficients(
                LaguerreSpec(max(n, 1), beta, mpf(1)), precision_bits
            ).coeffs[: n + 1]
        ) if n >= 1 else mpf(1)
        if s < 1:
            tail = coeff_sum * (big_t - x) ** (s - 1) * mp.gammainc(n + 1, big_t)
        else:
            tail = coeff_sum * mp.gammainc(n + int(mp.ceil(s)), big_t)

        rhs = (i_near + i_far) / mp.gamma(s)
        abs_error = abs(lhs - rhs)
    return AskeyResult(lhs=lhs, rhs=rhs, abs_error=abs_error, tail_bound=abs(tail))
