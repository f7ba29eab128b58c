"""Exact rational scalar backend.

Everything in this package computes exactly; no floating point is used
anywhere.  The inner loops spend most of their time on rational arithmetic,
so ``gmpy2.mpq`` is preferred when available.  Set

    QDESING_RATIONAL_BACKEND=fraction

to force the stdlib ``fractions.Fraction`` fallback (same semantics, slower),
or ``=gmpy2`` to insist on gmpy2.  ``benchmarks/bench_backends.py`` compares
the two.
"""

import os
from fractions import Fraction

_choice = os.environ.get("QDESING_RATIONAL_BACKEND", "auto").lower()
if _choice not in ("auto", "gmpy2", "fraction"):
    raise ValueError(
        "QDESING_RATIONAL_BACKEND must be one of auto/gmpy2/fraction, got %r" % _choice
    )

if _choice in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as Rational

        BACKEND = "gmpy2"
    except ImportError:
        if _choice == "gmpy2":
            raise
        Rational = Fraction
        BACKEND = "fraction"
else:
    Rational = Fraction
    BACKEND = "fraction"

RAT_ZERO = Rational(0)
RAT_ONE = Rational(1)


def rat(num, den=1):
    """Build a rational from integers (or pass an existing rational through)."""
    if den == 1 and type(num) is type(RAT_ONE):
        return num
    return Rational(num, den)


def rat_str(value) -> str:
    """Canonical text form: '3', '-3' or '3/4'."""
    n, d = value.numerator, value.denominator
    if d == 1:
        return str(int(n))
    return "%d/%d" % (int(n), int(d))
