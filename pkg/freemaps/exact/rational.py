"""Exact rational scalars.

`fractions.Fraction` already keeps the denominator positive and the
fraction reduced after every operation, so it serves as `Rational`.

"""
import fractions
import typing as t

Rational = fractions.Fraction

RationalLike = t.Union[int, str, fractions.Fraction]


def to_rational(value: RationalLike) -> Rational:
    """Convert an integer, a "p/q" string or a fraction.

    Floats are refused because they are not exact.

    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{value!r} is not an exact rational.")
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise ValueError(f"{value!r} is not of the form p/q.")
        return Rational(text)
    return Rational(value)


def format_rational(value: Rational) -> str:
    """Serialize as "p/q", integers included."""
    value = Rational(value)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Rational) -> int:
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)


def sign_symbol(value: int) -> str:
    """Render a sign as "+", "-" or "0"."""
    return {1: "+", -1: "-", 0: "0"}[value]
