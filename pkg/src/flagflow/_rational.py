from fractions import Fraction
from numbers import Integral, Rational


def as_rational(x) -> Fraction:
    """Coerce ``x`` to an exact Fraction; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (Integral, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if any(c in text for c in ".eE") :
            raise ValueError(f"decimal notation is not exact: {x!r}")
        return Fraction(text)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_integer(x) -> int:
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise TypeError(f"expected an integer, got {x!r}")
    return int(x)


def format_rational(q) -> str:
    """Canonical "p/q" form: reduced, positive denominator, integers as "p"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
