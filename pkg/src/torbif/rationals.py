"""Exact rational helpers shared across the package.

Every numeric quantity in this package is an integer or a rational, and
resonance conditions are decided by exact comparison, so floats are refused
at every boundary instead of being converted.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' with integer p and positive integer q."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    if "/" in text and text.rsplit("/", 1)[1].lstrip("0") == "":
        raise ValueError(f"malformed rational {text!r}; denominator must be positive")
    return Fraction(text)


def as_fraction(value: int | str | Fraction) -> Fraction:
    """Coerce an exact input to Fraction; floats (and bools) are refused."""
    if isinstance(value, bool):
        raise TypeError("expected an exact rational, got a bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rational_to_json(value: Fraction) -> int | str:
    """Integer-valued rationals serialize as ints, everything else as 'p/q'."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"
