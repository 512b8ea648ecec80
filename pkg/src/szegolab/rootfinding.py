"""Simultaneous root finding for the monic contracted polynomials.

Aberth-Ehrlich iteration with Newton polish.  Exact origin roots (all
trailing coefficients identically zero, the alpha = -k degenerate case)
are deflated before iterating, since simultaneous iterations stagnate on
multiple roots.  The default initial guess is a circle of radius 1/2 with
an irrational phase offset; when that fails, or when the coefficients
signal that every root is far inside it (|c_0|^(1/m) tiny), restarts use
the geometric-mean radius and then Newton-polygon annuli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import InvalidParameter, NonConvergence
from .laguerre import CoeffList, LaguerreSpec, monic_rescaled, recommended_precision
from .measures import DiscreteMeasure
from .precision import mantissa_bits, op_precision, workprec

SWEEP_CAP = 200

# Phase offset (as a fraction of a turn) for initial circles; irrational so
# no starting point hits a symmetry axis of the root set.
_GOLDEN = "0.6180339887498948482045868343656381177"

# |c_0|^(1/m) below this means the whole root set sits far inside the
# default circle |z| = 1/2; start from the geometric-mean radius instead.
_CLUSTER_SIGNAL = mpf("1e-3")


@dataclass(frozen=True)
class ZeroSet:
    """All roots (with multiplicity) plus per-root residuals |p/p'|."""

    zeros: tuple
    residuals: tuple
    origin_multiplicity: int
    spec: LaguerreSpec | None = None

    def __len__(self) -> int:
        return len(self.zeros)


def _horner_pair(coeffs, z):
    """Evaluate p(z) and p'(z) together; coeffs ascending degree."""
    p = mpc(coeffs[-1])
    dp = mpc(0)
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _start_circle(m, radius, offset_turns):
    pts = []
    for i in range(m):
        angle = 2 * mp.pi * (i + offset_turns) / m
        pts.append(radius * mp.e ** (1j * angle))
    return pts


def _newton_polygon_starts(coeffs, offset_turns):
    """Initial points from the upper convex hull of (k, log2|c_k|).

    Each hull segment of width d contributes d points on the annulus of
    radius (|c_lo|/|c_hi|)^(1/d), the classical estimate for the moduli of
    the roots it accounts for.
    """
    pts = [(k, mp.log(abs(c), 2)) for k, c in enumerate(coeffs) if c != 0]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) <= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    starts = []
    for (k1, v1), (k2, v2) in zip(hull, hull[1:]):
        d = k2 - k1
        radius = mpf(2) ** ((v1 - v2) / d)
        for i in range(d):
            angle = 2 * mp.pi * (i + offset_turns + k1) / d
            starts.append(radius * mp.e ** (1j * angle))
    return starts


def _aberth(coeffs, starts, tol):
    """Run Aberth-Ehrlich from the given starts; returns (roots, converged)."""
    z = [mpc(s) for s in starts]
    m = len(z)
    for _ in range(SWEEP_CAP):
        max_step = mpf(0)
        for i in range(m):
            p, dp = _horner_pair(coeffs, z[i])
            if p == 0:
                continue
            if dp == 0:
                dp = mpf(2) ** (-mp.prec)
            newton = p / dp
            s = mp.fsum((1 / (z[i] - z[j]) for j in range(m) if j != i))
            denom = 1 - newton * s
            step = newton if denom == 0 else newton / denom
            z[i] = z[i] - step
            max_step = max(max_step, abs(newton), abs(step))
        if max_step < tol:
            break
    else:
        return z, False
    return z, True


def _polish_and_residuals(coeffs, roots):
    polished = []
    residuals = []
    for z in roots:
        for _ in range(2):
            p, dp = _horner_pair(coeffs, z)
            if dp == 0 or p == 0:
                break
            z = z - p / dp
        p, dp = _horner_pair(coeffs, z)
        scale = abs(dp) if dp != 0 else mpf(2) ** (-mp.prec)
        polished.append(z)
        residuals.append(abs(p) / scale)
    return polished, residuals


def _sort_key(z):
    return (mp.arg(z), abs(z))


def find_roots(coeffs: CoeffList, precision_bits: int, tol=None) -> ZeroSet:
    """All roots of a monic polynomial, each with residual <= tol."""
    if not coeffs.monic_flag:
        raise InvalidParameter("find_roots requires a monic coefficient list")
    prec = op_precision(precision_bits, *coeffs.coeffs)
    if tol is None:
        tol = mpf(2) ** (-(precision_bits // 2))
    else:
        tol = mpf(tol) if not isinstance(tol, mpf) else tol
        if not (tol > 0):
            raise InvalidParameter(f"need tol > 0, got {tol}")
    n = coeffs.degree

    with workprec(prec + 16):
        c = list(coeffs.coeffs)
        mult = 0
        while mult < n and c[0] == 0:
            c.pop(0)
            mult += 1
        m = len(c) - 1
        zeros = [mpc(0)] * mult
        residuals = [mpf(0)] * mult

        if m == 1:
            root_list, res_list = _polish_and_residuals(c, [-mpc(c[0])])
        elif m == 2:
            b, c0 = mpc(c[1]), mpc(c[0])
            sq = mp.sqrt(b * b - 4 * c0)
            s = b + sq if mp.re(b.conjugate() * sq) >= 0 else b - sq
            q = -s / 2
            root_list, res_list = _polish_and_residuals(c, [q, c0 / q])
        elif m >= 3:
            root_list, res_list = _iterate_with_restarts(c, m, tol)
        else:
            root_list, res_list = [], []

        if res_list and max(res_list) > tol:
            raise NonConvergence(
                f"root residuals up to {mp.nstr(max(res_list), 6)} exceed "
                f"tol = {mp.nstr(tol, 6)} at {prec} bits",
                best=tuple(zeros + root_list),
                max_residual=max(res_list),
            )

        order = sorted(range(len(root_list)), key=lambda i: _sort_key(root_list[i]))
        zeros += [root_list[i] for i in order]
        residuals += [res_list[i] for i in order]

    return ZeroSet(
        zeros=tuple(zeros),
        residuals=tuple(residuals),
        origin_multiplicity=mult,
        spec=coeffs.spec,
    )


def _iterate_with_restarts(c, m, tol):
    offset = mpf(_GOLDEN)
    geo_radius = abs(c[0]) ** (mpf(1) / m)
    attempts = []
    if geo_radius < _CLUSTER_SIGNAL:
        attempts.append(_start_circle(m, geo_radius, offset))
        attempts.append(_start_circle(m, mpf(1) / 2, offset))
    else:
        attempts.append(_start_circle(m, mpf(1) / 2, offset))
        attempts.append(_start_circle(m, geo_radius, offset))
    attempts.append(_newton_polygon_starts(c, offset))

    best_roots, best_res = None, None
    for starts in attempts:
        roots, converged = _aberth(c, starts, tol)
        roots, res = _polish_and_residuals(c, roots)
        worst = max(res)
        if best_res is None or worst < max(best_res):
            best_roots, best_res = roots, res
        if converged and worst <= tol:
            return roots, res
    return best_roots, best_res


def contracted_zeros(
    n: int, alpha, precision_bits: int | None = None, tol=None
) -> ZeroSet:
    """Zeros of the contracted polynomial L_n^(alpha)(n z).

    Default precision is degree- and distance-aware: parameters
    exponentially close to the degenerate set S_n produce coefficients
    with catastrophic cancellation in the Vieta sums, so extra mantissa
    proportional to -log2 dist(alpha, S_n) is added automatically.
    """
    spec = LaguerreSpec.contracted(n, alpha)
    if precision_bits is None:
        precision_bits = recommended_precision(n, spec.alpha)
    monic = monic_rescaled(spec, precision_bits)
    return find_roots(monic, precision_bits, tol)


def counting_measure(zs: ZeroSet) -> DiscreteMeasure:
    """Uniform unit mass on the zeros (weights 1/n each)."""
    n = len(zs.zeros)
    if n == 0:
        raise InvalidParameter("empty zero set")
    prec = max(64, max((mantissa_bits(z) for z in zs.zeros), default=64))
    with workprec(prec):
        w = mpf(1) / n
        weights = (w,) * n
    if zs.spec is not None:
        label = (
            f"nu(L_{zs.spec.n}^({mp.nstr(zs.spec.alpha, 12)})"
            f"({mp.nstr(zs.spec.scale, 6)} z))"
        )
    else:
        label = f"nu(p_{n})"
    return DiscreteMeasure(points=zs.zeros, weights=weights, label=label)
