"""Simultaneous root finding and contracted-zero extraction."""

import random

import pytest
from mpmath import mp, mpc, mpf

from szegolab.errors import InvalidParameter, NonConvergence
from szegolab.laguerre import LaguerreSpec, monic_rescaled
from szegolab.precision import ap_real, op_precision, workprec
from szegolab.rootfinding import (
    ZeroSet,
    contracted_zeros,
    counting_measure,
    find_roots,
)

from conftest import gap


def _coeff_list(*ascending):
    from szegolab.laguerre import CoeffList

    return CoeffList(coeffs=tuple(mpf(c) for c in ascending), monic_flag=True)


def test_find_roots_quadratic():
    zs = find_roots(_coeff_list(-1, 0, 1), 128)
    vals = sorted(z.real for z in zs.zeros)
    assert gap(vals[0], mpf(-1), 128) <= mpf(2) ** -100
    assert gap(vals[1], mpf(1), 128) <= mpf(2) ** -100
    assert all(r <= mpf(2) ** -64 for r in zs.residuals)


def test_find_roots_exact_origin_deflation():
    zs = find_roots(_coeff_list(0, 0, 0, 1), 128)
    assert zs.origin_multiplicity == 3
    assert zs.zeros == (mpc(0), mpc(0), mpc(0))
    assert zs.residuals == (mpf(0), mpf(0), mpf(0))


def test_find_roots_requires_monic():
    from szegolab.laguerre import CoeffList

    bad = CoeffList(coeffs=(mpf(1), mpf(2)), monic_flag=False)
    with pytest.raises(InvalidParameter):
        find_roots(bad, 128)
    with pytest.raises(InvalidParameter):
        find_roots(_coeff_list(-1, 0, 1), 128, tol=0)


def test_monic_rescaled_triple_origin_root():
    coeffs = monic_rescaled(LaguerreSpec(3, -3, 3), 192)
    zs = find_roots(coeffs, 192)
    assert zs.origin_multiplicity == 3
    assert zs.zeros == (mpc(0), mpc(0), mpc(0))


def test_contracted_zeros_count_and_residuals():
    prec = 256
    zs = contracted_zeros(10, mpf("-10.5"), prec)
    assert len(zs) == 10
    assert zs.origin_multiplicity == 0
    tol = mpf(2) ** -(prec // 2)
    assert max(zs.residuals) <= tol


def test_vieta_sum_and_product():
    prec = 256
    rng = random.Random(31415)
    for n in (8, 15, 24):
        alpha = ap_real(f"{rng.uniform(-(n + 4), -1):.10f}", prec)
        zs = contracted_zeros(n, alpha, prec)
        coeffs = monic_rescaled(LaguerreSpec.contracted(n, alpha), prec)
        with workprec(op_precision(prec, alpha) + 32):
            mean = mp.fsum(zs.zeros) / n
            expected = (n + alpha) / n
            assert abs(mean - expected) / max(1, abs(expected)) <= mpf(2) ** -(
                prec // 4
            )
            prod = mpf(1)
            for z in zs.zeros:
                prod *= z
            expected_prod = (mpf(-1)) ** n * coeffs.coeffs[0]
            assert abs(prod - expected_prod) / max(1, abs(expected_prod)) <= mpf(
                2
            ) ** -(prec // 4)


def test_zeros_closed_under_conjugation():
    prec = 192
    zs = contracted_zeros(12, mpf("-12.25"), prec)
    tol = mpf(2) ** -(prec // 4)
    with workprec(prec + 16):
        for z in zs.zeros:
            best = min(gap(z.conjugate(), w, prec) for w in zs.zeros)
            assert best <= tol


def test_origin_multiplicity_for_integer_alpha_in_degenerate_set():
    zs = contracted_zeros(6, -4, 256)
    assert zs.origin_multiplicity == 4
    assert zs.zeros[:4] == (mpc(0),) * 4
    assert all(z != 0 for z in zs.zeros[4:])


def test_zeros_sorted_by_argument():
    zs = contracted_zeros(9, mpf("-9.5"), 192)
    keys = [(mp.arg(z), abs(z)) for z in zs.zeros]
    assert keys == sorted(keys)


def test_superexponential_cluster_collapses():
    # alpha = -n + e^(-n^2) drives every zero toward the origin; the
    # geometric restart ladder must still converge to residual tolerance.
    n = 12
    prec = None  # distance-aware default
    with workprec(640):
        alpha = -n + mp.e ** (-(mpf(n) ** 2))
    zs = contracted_zeros(n, alpha, prec)
    assert max(abs(z) for z in zs.zeros) < mpf("1e-3")
    assert max(zs.residuals) <= mpf(2) ** -64


def test_non_convergence_carries_diagnostics():
    err = NonConvergence("no luck", best=(mpc(1),), max_residual=mpf("0.5"))
    assert err.best == (mpc(1),)
    assert err.max_residual == mpf("0.5")


def test_counting_measure():
    zs = contracted_zeros(8, mpf("-8.5"), 192)
    mu = counting_measure(zs)
    assert len(mu.points) == 8
    with workprec(192):
        assert gap(mu.total_mass(), mpf(1), 192) <= mpf(2) ** -150
    assert all(w == mu.weights[0] for w in mu.weights)
    with pytest.raises(InvalidParameter):
        counting_measure(ZeroSet(zeros=(), residuals=(), origin_multiplicity=0))
