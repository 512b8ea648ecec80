"""Shared helpers for the test suite.

Assertions on mpmath scalars must not run at the default 53-bit ambient
precision: arithmetic rounds every operand to the ambient context first, so
a difference of two 192-bit values computed at 53 bits reports rounding
noise instead of the true gap.  All comparisons go through gap(), which
lifts the working precision to the operands' mantissa widths.
"""

from mpmath import mp

from szegolab.precision import op_precision, workprec


def gap(a, b, precision_bits: int = 128):
    """|a - b| computed at a precision that cannot truncate either operand."""
    with workprec(op_precision(precision_bits, a, b)):
        return abs(a - b)


def rel_gap(a, b, precision_bits: int = 128):
    """|a - b| / max(1, |b|) at operand-safe precision."""
    with workprec(op_precision(precision_bits, a, b)):
        return abs(a - b) / max(mp.mpf(1), abs(b))
