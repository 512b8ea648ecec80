"""Precision plumbing: validation, contexts, and mixed-precision arithmetic."""

import pytest
from mpmath import mp, mpc, mpf

from szegolab.errors import ConfigurationError, PrecisionError
from szegolab.precision import (
    MIN_PRECISION_BITS,
    ap_complex,
    ap_real,
    check_precision,
    decimal_digits,
    default_precision,
    format_real,
    mantissa_bits,
    op_precision,
    workprec,
)

from conftest import gap


def test_check_precision_accepts_minimum():
    assert check_precision(MIN_PRECISION_BITS) == 64
    assert check_precision(512) == 512


def test_check_precision_rejects_low_and_non_int():
    with pytest.raises(PrecisionError):
        check_precision(32)
    with pytest.raises(PrecisionError):
        check_precision("128")
    with pytest.raises(PrecisionError):
        check_precision(True)
    with pytest.raises(PrecisionError):
        check_precision(127.0)


def test_precision_error_is_configuration_error():
    assert issubclass(PrecisionError, ConfigurationError)


def test_workprec_sets_and_restores():
    outside = mp.prec
    with workprec(300):
        assert mp.prec == 300
    assert mp.prec == outside
    with pytest.raises(PrecisionError):
        with workprec(16):
            pass


def test_mantissa_bits():
    assert mantissa_bits(ap_real("0.1", 192)) == 192
    assert mantissa_bits(mpf(0)) == 0
    assert mantissa_bits(42) == 0
    z = ap_complex("0.1", 256, imag="0.2")
    assert mantissa_bits(z) == 256


def test_op_precision_lifts_to_operands():
    x = ap_real("0.1", 320)
    assert op_precision(64, x) == 320
    assert op_precision(400, x) == 400
    assert op_precision(64, 3, 0.5) == 64


def test_ap_real_parses_at_requested_bits():
    a = ap_real("0.1", 64)
    b = ap_real("0.1", 128)
    assert a != b
    assert mantissa_bits(b) == 128
    assert ap_real(3, 64) == 3


def test_ap_complex_forms():
    z = ap_complex("1.5", 96, imag="-2.25")
    assert z.real == mpf("1.5") and z.imag == mpf("-2.25")
    w = ap_complex(mpc(1, 1), 96)
    assert w == mpc(1, 1)


def test_mixed_precision_subtraction_keeps_information():
    # The same decimal parsed at two precisions differs by ~2^-65.  At the
    # default 53-bit ambient context the subtraction would round both
    # operands first and report garbage; op_precision lifts to 256 bits and
    # resolves the true gap.
    a = ap_real("0.123456789123456789", 256)
    b = ap_real("0.123456789123456789", 64)
    assert op_precision(64, a, b) == 256
    d = gap(a, b, 64)
    assert mpf(0) < d < mpf(2) ** -60


def test_default_precision_floor_and_growth():
    assert default_precision(1) == 128
    assert default_precision(36) == 128
    assert default_precision(60) == 210
    assert default_precision(120) == 420


def test_decimal_digits():
    assert decimal_digits(64) == 22
    assert decimal_digits(512) == 157


def test_format_real_deterministic_and_precision_faithful():
    x = ap_real("0.1", 256)
    y = ap_real("0.1", 64)
    sx = format_real(x, 256)
    assert sx == format_real(x, 256)
    # distinct binary values render distinct decimal strings
    assert sx != format_real(y, 256)
    assert format_real(3, 128) == "3.0"
    # round trip: parsing the rendered digits recovers the binary value
    assert ap_real(sx, 256) == x
