"""The map phi(z) = z e^(1-z), its level curves, and point classification.

Gamma_r = {z : |z e^(1-z)| = e^(-r), |z| <= 1} is traced by Newton
continuation in the image angle theta, solving phi(z_j) = e^(-r) e^(i
theta_j) along theta_j = 2 pi j / M starting from the positive real
crossing x0(r).  At r = 0 the curve has a corner at z = 1 where phi'
vanishes; the nodes next to the corner are seeded from the local model
phi(z) = 1 - (z-1)^2/2, i.e. z = 1 - sqrt(2(1-w)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import InvalidParameter, TraceError
from .precision import op_precision, workprec

DEFAULT_TRACE_PRECISION = 192

# Candidates that escape the closed unit disk by more than this have jumped
# to the unbounded branch of the level set and are rejected.
BRANCH_SLACK = mpf("1e-8")


class RegionTag(enum.Enum):
    INTERIOR = "interior"
    ON_CURVE = "on_curve"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class LevelCurve:
    """Traced samples (theta_j, z_j) of Gamma_r, ordered by theta."""

    r: mpf
    samples: tuple
    closed_flag: bool
    level: mpf
    max_residual: mpf
    precision_bits: int

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def points(self) -> tuple:
        return tuple(z for _, z in self.samples)

    @property
    def thetas(self) -> tuple:
        return tuple(t for t, _ in self.samples)


def phi_map(z, precision_bits: int = 128):
    """phi(z) = z e^(1-z)."""
    prec = op_precision(precision_bits, z)
    with workprec(prec):
        zc = mpc(z) if isinstance(z, (complex, mpc)) else mpf(z)
        return zc * mp.e ** (1 - zc)


def _phi_prime(z):
    return (1 - z) * mp.e ** (1 - z)


def real_crossings(r, precision_bits: int = DEFAULT_TRACE_PRECISION):
    """Real-axis crossings of Gamma_r.

    x0 in (0, 1] solves x e^(1-x) = e^(-r); x_neg in (-1, 0) solves
    |x| e^(1-x) = e^(-r).  Bisection to 2^(-precision/2), then Newton
    polish.
    """
    r = mpf(r) if not isinstance(r, mpf) else r
    if not (r >= 0):
        raise InvalidParameter(f"need r >= 0, got {r}")
    prec = op_precision(precision_bits, r)
    with workprec(prec + 16):
        level = mp.e ** (-r)

        def bisect_newton(f, fprime, lo, hi):
            flo = f(lo)
            for _ in range(prec // 2 + 10):
                mid = (lo + hi) / 2
                fm = f(mid)
                if fm == 0:
                    return mid
                if (fm < 0) == (flo < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            x = (lo + hi) / 2
            for _ in range(4):
                x = x - f(x) / fprime(x)
            return x

        if r == 0:
            x0 = mpf(1)
        else:
            x0 = bisect_newton(
                lambda x: x * mp.e ** (1 - x) - level,
                lambda x: (1 - x) * mp.e ** (1 - x),
                mpf(2) ** (-prec),
                mpf(1),
            )
        # Negative crossing: with a = -x, solve a e^(1+a) = e^(-r), a in (0, 1).
        a = bisect_newton(
            lambda a: a * mp.e ** (1 + a) - level,
            lambda a: (1 + a) * mp.e ** (1 + a),
            mpf(2) ** (-prec),
            mpf(1),
        )
        return x0, -a


def _newton_invert(w, z0, tol, max_iter=80):
    """Solve phi(z) = w by Newton from z0; returns (z, ok)."""
    z = z0
    for _ in range(max_iter):
        fz = z * mp.e ** (1 - z) - w
        if abs(fz) <= tol:
            return z, True
        dz = _phi_prime(z)
        if dz == 0:
            z = z + mpf(2) ** (-mp.prec // 2)
            continue
        z = z - fz / dz
    fz = z * mp.e ** (1 - z) - w
    return z, abs(fz) <= tol


def trace_level_curve(
    r, M: int, precision_bits: int = DEFAULT_TRACE_PRECISION
) -> LevelCurve:
    """Trace Gamma_r at M equispaced image angles theta_j = 2 pi j / M."""
    r = mpf(r) if not isinstance(r, mpf) else r
    if not (r >= 0) or not mp.isfinite(r):
        raise InvalidParameter(f"need finite r >= 0, got {r}")
    if not isinstance(M, int) or M < 16 or M % 2 != 0:
        raise InvalidParameter(f"need even node count M >= 16, got {M}")
    prec = op_precision(precision_bits, r)
    with workprec(prec + 16):
        level = mp.e ** (-r)
        tol = level * mpf(2) ** (-(prec - 8))
        x0, _ = real_crossings(r, precision_bits)
        two_pi = 2 * mp.pi
        samples = [(mpf(0), mpc(x0))]
        z_prev = mpc(x0)
        corner = r == 0
        for j in range(1, M):
            theta = two_pi * j / M
            w = level * mp.e ** (1j * theta)
            if corner and j == 1:
                # Local square-root model at the corner z = 1.
                seed = 1 - mp.sqrt(2 * (1 - w))
            else:
                dphi = _phi_prime(z_prev)
                if dphi == 0:
                    seed = 1 - mp.sqrt(2 * (1 - w))
                else:
                    # First-order predictor along the curve: dz/dtheta = i w / phi'.
                    seed = z_prev + 1j * w * (two_pi / M) / dphi
            z, ok = _newton_invert(w, seed, tol)
            if ok and abs(z) > 1 + BRANCH_SLACK:
                z, ok = _newton_invert(w, z_prev, tol)
            if not ok or abs(z) > 1 + BRANCH_SLACK:
                z, ok = _substep(w, z_prev, level, theta - two_pi / M, theta, tol, 8)
            if not ok:
                raise TraceError(
                    f"continuation failed at theta = {mp.nstr(theta, 8)} (r={r})"
                )
            samples.append((theta, z))
            z_prev = z
        residual = max(abs(abs(z * mp.e ** (1 - z)) - level) for _, z in samples)
    return LevelCurve(
        r=r,
        samples=tuple(samples),
        closed_flag=True,
        level=level,
        max_residual=residual,
        precision_bits=precision_bits,
    )


def _substep(w_target, z_start, level, theta_lo, theta_hi, tol, depth):
    """Bisect the continuation step when direct Newton loses the branch."""
    if depth == 0:
        return z_start, False
    theta_mid = (theta_lo + theta_hi) / 2
    w_mid = level * mp.e ** (1j * theta_mid)
    z_mid, ok = _newton_invert(w_mid, z_start, tol)
    if not ok or abs(z_mid) > 1 + BRANCH_SLACK:
        z_mid, ok = _substep(w_mid, z_start, level, theta_lo, theta_mid, tol, depth - 1)
        if not ok:
            return z_start, False
    z, ok = _newton_invert(w_target, z_mid, tol)
    if ok and abs(z) <= 1 + BRANCH_SLACK:
        return z, True
    return _substep(w_target, z_mid, level, theta_mid, theta_hi, tol, depth - 1)


def winding_number(points, z) -> int:
    """Winding number about z of the closed polyline through points."""
    total = mpf(0)
    m = len(points)
    for j in range(m):
        a = points[j] - z
        b = points[(j + 1) % m] - z
        total += mp.arg(b / a)
    return int(mp.nint(total / (2 * mp.pi)))


def locate(z, curve: LevelCurve, tol=None) -> RegionTag:
    """Classify z against Gamma_r: on the curve, interior, or exterior.

    OnCurve means the defining-equation residual ||phi(z)| - e^(-r)| is
    below tol and |z| <= 1 + tol.  Interior/Exterior use the winding
    number of the traced polyline (the sublevel set |phi| < e^(-r) has an
    extra unbounded component along the positive real axis, so the
    inequality alone cannot classify).
    """
    prec = op_precision(curve.precision_bits, z)
    with workprec(prec + 16):
        if tol is None:
            tol = max(mpf("1e-12"), 8 * curve.max_residual)
        zc = mpc(z)
        residual = abs(abs(zc * mp.e ** (1 - zc)) - curve.level)
        if residual <= tol and abs(zc) <= 1 + tol:
            return RegionTag.ON_CURVE
        if abs(zc) > 1 + tol:
            return RegionTag.EXTERIOR
        if winding_number(curve.points, zc) == 1:
            return RegionTag.INTERIOR
        return RegionTag.EXTERIOR
