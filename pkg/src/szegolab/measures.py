"""Discrete measures: weighted point sets on the complex plane."""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import InvalidParameter, SingularEvaluation
from .precision import mantissa_bits, op_precision

# Weight-sum slack: weights are constructed exactly (1/M each) but may pass
# through decimal serialization, so allow a generous binary epsilon.
MASS_TOL_BITS = 32


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely supported probability measure sum_i w_i * delta(x_i)."""

    points: tuple
    weights: tuple
    label: str = ""

    def __post_init__(self):
        # Coerce only foreign types: mpc(p) under a low ambient precision
        # would silently truncate high-precision support points.
        points = tuple(
            p if isinstance(p, (mpf, mpc)) else mpc(p) for p in self.points
        )
        weights = tuple(
            w if isinstance(w, mpf) else mpf(w) for w in self.weights
        )
        if len(points) != len(weights):
            raise InvalidParameter(
                f"{len(points)} points but {len(weights)} weights"
            )
        if not points:
            raise InvalidParameter("measure needs at least one point")
        if any(w < 0 for w in weights):
            raise InvalidParameter("weights must be nonnegative")
        with mp.workprec(max(64, *(mantissa_bits(w) for w in weights))):
            total = mp.fsum(weights)
            mass_err = abs(total - 1)
        if mass_err > mpf(2) ** (-MASS_TOL_BITS):
            raise InvalidParameter(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.points)

    def total_mass(self) -> mpf:
        with mp.workprec(max(64, *(mantissa_bits(w) for w in self.weights))):
            return mp.fsum(self.weights)


# Points closer than this to a support point make the log potential
# meaningless at working precisions; reject instead of returning noise.
SINGULAR_DISTANCE = mpf("1e-30")


def log_potential(mu: DiscreteMeasure, z, precision_bits: int) -> mpf:
    """Logarithmic potential V^mu(z) = -sum_i w_i log|z - x_i|."""
    prec = op_precision(precision_bits, z, *mu.points)
    with mp.workprec(prec):
        zc = mpc(z)
        terms = []
        for x, w in zip(mu.points, mu.weights):
            d = abs(zc - x)
            if d <= SINGULAR_DISTANCE:
                raise SingularEvaluation(
                    f"evaluation point {zc} within {SINGULAR_DISTANCE} of support"
                )
            if w:
                terms.append(-w * mp.log(d))
        return mp.fsum(terms)
