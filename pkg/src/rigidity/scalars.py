"""Dual arithmetic modes: 64-bit floats or exact rationals.

A computation runs uniformly in one mode.  Exact mode carries
``fractions.Fraction`` end to end so certificates stay lossless; float mode
is for optimization and geometry sampling.  Mixing a float with a Fraction
inside one value is an error, never a silent coercion.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .errors import ModeMixError, ValidationError

Scalar = Union[float, Fraction]


class Mode(str, Enum):
    FLOAT = "float"
    EXACT = "exact"


def infer_mode(values: Sequence) -> Mode:
    """Mode of a homogeneous scalar collection.

    Ints are exact and join either mode; a mix of floats and Fractions is
    rejected.  An all-int collection is exact.
    """
    has_float = any(isinstance(v, float) for v in values)
    has_exact = any(isinstance(v, Fraction) for v in values)
    if has_float and has_exact:
        raise ModeMixError("cannot mix float and exact rational entries in one value")
    for v in values:
        if not isinstance(v, (int, float, Fraction)):
            raise ValidationError(f"unsupported scalar type {type(v).__name__!r}")
    return Mode.FLOAT if has_float else Mode.EXACT


def coerce(values: Sequence, mode: Mode) -> tuple:
    if mode is Mode.FLOAT:
        return tuple(float(v) for v in values)
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a plain integer/decimal string) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"malformed rational {text!r}") from exc


def format_scalar(value: Scalar, mode: Mode) -> Union[str, float]:
    """Wire form of a scalar: "p/q" string in exact mode, float otherwise."""
    if mode is Mode.EXACT:
        frac = value if isinstance(value, Fraction) else Fraction(value)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"
    return float(value)
