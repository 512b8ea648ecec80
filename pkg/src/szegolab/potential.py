"""Discretized mu_r, logarithmic potentials, balayage checks, Leja points.

mu_r is the image of the uniform angle measure dtheta/2pi under the
inverse of phi on Gamma_r: discretization is therefore equal weights 1/M
at the traced nodes.  That estimator is spectrally accurate for r > 0; at
r = 0 the curve's corner at z = 1 makes the theta-parametrization only
Holder-1/2, the trapezoid error decays like M^(-3/2), and integrals
against mu_0 needing more accuracy should use the substituted quadrature
(refined_moment / refined_potential below, theta = u^2) instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import InvalidParameter, InvalidTestPoint
from .measures import DiscreteMeasure, log_potential
from .precision import op_precision, workprec
from .szego import (
    DEFAULT_TRACE_PRECISION,
    LevelCurve,
    RegionTag,
    locate,
    trace_level_curve,
)


@dataclass(frozen=True)
class ExternalField:
    """The external field phi_ext(z) = (log|z| + Re z)/2 and its weight.

    omega = e^(-phi_ext) = |z|^(-1/2) e^(-Re z / 2) is an admissible
    weight on every Gamma_r (positive and continuous there; unbounded only
    at z = 0, which no finite-r curve contains).
    """

    def phi(self, z, precision_bits: int = 128) -> mpf:
        prec = op_precision(precision_bits, z)
        with workprec(prec):
            zc = mpc(z)
            return (mp.log(abs(zc)) + mp.re(zc)) / 2

    def omega(self, z, precision_bits: int = 128) -> mpf:
        prec = op_precision(precision_bits, z)
        with workprec(prec):
            return mp.e ** (-self.phi(z, precision_bits))


DEFAULT_FIELD = ExternalField()


@dataclass(frozen=True)
class BalayageCheck:
    point: mpc
    identity: str
    lhs: mpf
    rhs: mpf

    @property
    def abs_error(self) -> mpf:
        with workprec(op_precision(64, self.lhs, self.rhs)):
            return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class BalayageReport:
    r: mpf
    checks: tuple

    def worst(self, identity_prefix: str = "") -> mpf:
        errs = [
            c.abs_error for c in self.checks if c.identity.startswith(identity_prefix)
        ]
        if not errs:
            raise InvalidParameter(f"no checks match prefix {identity_prefix!r}")
        return max(errs)


def discretize_mu_r(
    r, M: int, precision_bits: int = DEFAULT_TRACE_PRECISION
) -> DiscreteMeasure:
    """Equal-weight discretization of mu_r on the traced Gamma_r nodes.

    r = +inf yields the limit measure delta_0.
    """
    r = mpf(r) if not isinstance(r, mpf) else r
    if r == mp.inf:
        return DiscreteMeasure(points=(mpc(0),), weights=(mpf(1),), label="delta_0")
    curve = trace_level_curve(r, M, precision_bits)
    with workprec(precision_bits):
        w = mpf(1) / M
    return DiscreteMeasure(
        points=curve.points,
        weights=(w,) * M,
        label=f"mu_r(r={mp.nstr(r, 10)}, M={M})",
    )


def pullback_density(curve: LevelCurve) -> tuple:
    """Density of mu_r against dtheta at each node, from the traced samples.

    Re[(1/2 pi i) (1-z)/z * z'(theta)] with z' by central differences, so
    this is an honest consistency check rather than the tautology obtained
    from the analytic z' = i w / phi'(z) (which reduces to 1/2pi
    identically).  At the r = 0 corner node the (1-z) factor vanishes and
    the computed density is 0, the continuity limit being 1/2pi.
    """
    m = len(curve.samples)
    prec = curve.precision_bits
    with workprec(prec + 16):
        h = 2 * mp.pi / m
        out = []
        pts = curve.points
        for j in range(m):
            z = pts[j]
            dz = (pts[(j + 1) % m] - pts[(j - 1) % m]) / (2 * h)
            val = (1 - z) / z * dz / (2j * mp.pi)
            out.append(mp.re(val))
    return tuple(out)


def harmonic_moments(mu: DiscreteMeasure, k_max: int, precision_bits: int = 192):
    """Discrete moments sum_i w_i x_i^k for k = 0..k_max."""
    prec = op_precision(precision_bits, *mu.points)
    with workprec(prec):
        out = []
        for k in range(k_max + 1):
            out.append(
                mp.fsum((w * x**k for x, w in zip(mu.points, mu.weights)))
            )
    return out


def _invert_phi_factory(r, precision_bits):
    """Return theta -> z(theta) on Gamma_r, seeded from a coarse trace."""
    coarse = trace_level_curve(r, 256, precision_bits)
    pts = coarse.points
    level = coarse.level

    def z_of_theta(theta):
        two_pi = 2 * mp.pi
        theta = theta % two_pi
        w = level * mp.e ** (1j * theta)
        j = int(mp.nint(theta / two_pi * len(pts))) % len(pts)
        z = pts[j]
        if r == 0 and min(theta, two_pi - theta) < mpf(1) / 4:
            z = 1 - mp.sqrt(2 * (1 - w))
        tol = level * mpf(2) ** (-(mp.prec - 12))
        for _ in range(80):
            fz = z * mp.e ** (1 - z) - w
            if abs(fz) <= tol:
                return z
            z = z - fz / ((1 - z) * mp.e ** (1 - z))
        raise InvalidParameter(f"inversion stalled at theta={mp.nstr(theta, 8)}")

    return z_of_theta


def refined_moment(r, k: int, precision_bits: int = 192) -> mpf:
    """Moment int z^k dmu_r by corner-aware quadrature (theta = u^2).

    The substitution makes the integrand analytic in u even at the r = 0
    corner, restoring spectral accuracy where the equal-weight node sum is
    limited to M^(-3/2).
    """
    prec = op_precision(precision_bits)
    with workprec(prec + 16):
        zf = _invert_phi_factory(r, precision_bits)

        def f(u):
            # theta = u^2 on the upper half; conjugation symmetry doubles Re.
            return mp.re(zf(u * u) ** k) * 2 * u

        val = mp.quad(f, [0, mp.sqrt(mp.pi)], maxdegree=10) / mp.pi
        return val


def refined_potential(r, z, precision_bits: int = 192) -> mpf:
    """V^(mu_r)(z) by the same corner-aware quadrature."""
    prec = op_precision(precision_bits, z)
    with workprec(prec + 16):
        zc = mpc(z)
        zf = _invert_phi_factory(r, precision_bits)

        def f(u):
            return -mp.log(abs(zc - zf(u * u))) * 2 * u

        upper = mp.quad(f, [0, mp.sqrt(mp.pi)], maxdegree=10)

        def g(u):
            return -mp.log(abs(zc - zf(-(u * u)))) * 2 * u

        lower = mp.quad(g, [0, mp.sqrt(mp.pi)], maxdegree=10)
        return (upper + lower) / (2 * mp.pi)


def verify_balayage(
    r,
    M: int,
    interior_pts,
    exterior_pts,
    precision_bits: int = DEFAULT_TRACE_PRECISION,
) -> BalayageReport:
    """Check the balayage identities of mu_r at explicit points.

    (i) interior: V + Re z = r + 1 (the harmonic extension is constant on
    the closure of G_r); (ii) exterior: V + log|z| = 0 (balayage constant
    vanishes for the unbounded component); (iii) V(0) = r + 1;
    (iv) on-curve external field: V + phi_ext = (r+1)/2, evaluated at
    points offset from the curve by 3 node spacings since the discrete
    potential is singular at the nodes themselves.
    """
    r = mpf(r) if not isinstance(r, mpf) else r
    curve = trace_level_curve(r, M, precision_bits)
    checks = []
    prec = op_precision(precision_bits, r)
    with workprec(prec + 16):
        mu = DiscreteMeasure(
            points=curve.points,
            weights=(mpf(1) / M,) * M,
            label=f"mu_r(r={mp.nstr(r, 10)}, M={M})",
        )
        rp1 = r + 1
        v0 = log_potential(mu, mpc(0), precision_bits)
        checks.append(BalayageCheck(mpc(0), "origin: V(0)", v0, rp1))
        for z in interior_pts:
            zc = mpc(z)
            if locate(zc, curve) is not RegionTag.INTERIOR:
                raise InvalidTestPoint(f"{zc} is not interior to Gamma_r")
            lhs = log_potential(mu, zc, precision_bits) + mp.re(zc)
            checks.append(BalayageCheck(zc, "interior: V + Re z", lhs, rp1))
        for z in exterior_pts:
            zc = mpc(z)
            if locate(zc, curve) is not RegionTag.EXTERIOR:
                raise InvalidTestPoint(f"{zc} is not exterior to Gamma_r")
            lhs = log_potential(mu, zc, precision_bits) + mp.log(abs(zc))
            checks.append(BalayageCheck(zc, "exterior: V + log|z|", lhs, mpf(0)))
        # (iv) at inward/outward offsets of a few nodes away from theta = 0.
        pts = curve.points
        for j in (M // 8, 3 * M // 8, 5 * M // 8):
            z = pts[j]
            tangent = pts[(j + 1) % M] - pts[(j - 1) % M]
            spacing = abs(tangent) / 2
            normal = 1j * tangent / abs(tangent)
            for side in (1, -1):
                zt = z + side * 3 * spacing * normal
                lhs = log_potential(mu, zt, precision_bits) + DEFAULT_FIELD.phi(
                    zt, precision_bits
                )
                checks.append(
                    BalayageCheck(zt, "field: V + phi_ext", lhs, rp1 / 2)
                )
    return BalayageReport(r=r, checks=tuple(checks))


@dataclass(frozen=True)
class EnergyResult:
    """Weighted energy I and the modified Robin functional F = I - int phi dmu."""

    energy: mpf
    robin: mpf

    def __iter__(self):
        return iter((self.energy, self.robin))


def weighted_energy(
    mu: DiscreteMeasure,
    field: ExternalField = DEFAULT_FIELD,
    precision_bits: int = 128,
) -> EnergyResult:
    """Discrete weighted energy of mu, diagonal excluded.

    I = -sum_{i != j} w_i w_j log|x_i - x_j| + 2 sum_i w_i phi(x_i); the
    diagonal exclusion biases I by O(log M / M), which the calling checks
    absorb into their tolerances.
    """
    pts = mu.points
    if len(pts) < 2:
        raise InvalidParameter("weighted energy needs at least 2 points")
    prec = op_precision(precision_bits, *pts)
    with workprec(prec + 16):
        terms = []
        for i in range(len(pts)):
            wi = mu.weights[i]
            if wi == 0:
                continue
            for j in range(i + 1, len(pts)):
                if mu.weights[j] == 0:
                    continue
                d = abs(pts[i] - pts[j])
                if d == 0:
                    raise InvalidParameter(
                        "coincident support points give infinite energy"
                    )
                terms.append(-2 * wi * mu.weights[j] * mp.log(d))
        field_sum = mp.fsum(
            (w * field.phi(x, precision_bits) for x, w in zip(pts, mu.weights))
        )
        energy = mp.fsum(terms) + 2 * field_sum
        return EnergyResult(energy=energy, robin=energy - field_sum)


@dataclass(frozen=True)
class LejaResult:
    measure: DiscreteMeasure
    sup_norm: mpf
    robin_estimate: mpf


def weighted_leja(
    r,
    N: int,
    grid_M: int,
    precision_bits: int = 128,
    field: ExternalField = DEFAULT_FIELD,
) -> LejaResult:
    """Greedy weighted Leja points on Gamma_r.

    z_k maximizes omega(z)^k prod_{j<k} |z - z_j| over the traced grid
    (k = 1..N); t_hat_N = max_z omega(z)^N prod_{j<=N} |z - z_j| estimates
    the weighted Chebyshev constant, so -log(t_hat_N)/N approximates the
    modified Robin constant (r+1)/2.
    """
    if N < 1:
        raise InvalidParameter(f"need N >= 1, got {N}")
    if grid_M < 8 * N:
        raise InvalidParameter(f"need grid_M >= 8 N = {8 * N}, got {grid_M}")
    r = mpf(r) if not isinstance(r, mpf) else r
    curve = trace_level_curve(r, grid_M, precision_bits)
    grid = curve.points
    prec = op_precision(precision_bits, r)
    with workprec(prec + 16):
        log_w = [-field.phi(g, precision_bits) for g in grid]
        log_prod = [mpf(0)] * grid_M
        chosen = []
        for k in range(1, N + 1):
            best_i = max(
                range(grid_M), key=lambda i: k * log_w[i] + log_prod[i]
            )
            zk = grid[best_i]
            chosen.append(zk)
            for i in range(grid_M):
                d = abs(grid[i] - zk)
                log_prod[i] = log_prod[i] + (mp.log(d) if d > 0 else mp.ninf)
        best = max(N * log_w[i] + log_prod[i] for i in range(grid_M))
        sup_norm = mp.e**best
        robin_estimate = -best / N
        measure = DiscreteMeasure(
            points=tuple(chosen),
            weights=(mpf(1) / N,) * N,
            label=f"leja(r={mp.nstr(r, 10)}, N={N})",
        )
    return LejaResult(measure=measure, sup_norm=sup_norm, robin_estimate=robin_estimate)
