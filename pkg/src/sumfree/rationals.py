"""Exact rational arithmetic backend.

Every number in this package is an exact fraction; no floating point is
used anywhere in the core algebra.  We prefer gmpy2's mpq (GMP-backed,
roughly an order of magnitude faster) and fall back to the stdlib
fractions.Fraction, which implements identical semantics.  Both types
canonicalize to lowest terms with a positive denominator and print as
``p/q`` (or ``p`` when the denominator is 1), which is the canonical
text form used throughout.

Set ``SUMFREE_RATIONAL=fractions`` to force the stdlib backend.
"""

from __future__ import annotations

import os
from fractions import Fraction

_choice = os.environ.get("SUMFREE_RATIONAL", "").strip().lower()

if _choice in ("", "gmpy2"):
    try:
        from gmpy2 import mpq as _make_rational

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:
        if _choice == "gmpy2":
            raise
        _make_rational = Fraction
        RATIONAL_BACKEND = "fractions"
elif _choice in ("fraction", "fractions"):
    _make_rational = Fraction
    RATIONAL_BACKEND = "fractions"
else:
    raise RuntimeError(f"unknown SUMFREE_RATIONAL backend {_choice!r}")

#: the concrete rational type in use (for isinstance checks)
Rational = type(_make_rational(0))


def rational(numerator, denominator=1):
    """Build an exact rational, reduced to lowest terms.

    Accepts ints, an existing rational, or a ``p/q`` string.
    """
    return _make_rational(numerator, denominator)


ZERO = rational(0)
ONE = rational(1)
THIRD = rational(1, 3)
TWO_THIRDS = rational(2, 3)

#: the optimal measure of a 3-sum-free subset of [0,1]
MAX_MEASURE = rational(77, 177)


def format_rational(value) -> str:
    """Canonical text form: ``p/q`` in lowest terms, ``p`` when q = 1."""
    return str(_make_rational(value))


def to_decimal(value, places: int) -> str:
    """Round a rational to a fixed number of decimal places (half away
    from zero).  Convenience display only; never authoritative.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    v = _make_rational(value)
    num, den = int(v.numerator), int(v.denominator)
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled, rem = divmod(num * 10**places, den)
    if 2 * rem >= den:
        scaled += 1
    digits = str(scaled).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
