"""Univariate polynomials over the rationals, backed by `sympy.Poly`."""
import dataclasses
import functools
import typing as t
import sympy
from . import rational as ra

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

T = sympy.Symbol("t")


def to_sympy_rational(value: ra.Rational) -> sympy.Rational:
    value = ra.to_rational(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy_rational(value) -> ra.Rational:
    value = sympy.Rational(value)
    return ra.Rational(int(value.p), int(value.q))


@dataclasses.dataclass(frozen=True)
class RatPoly:
    """A dense polynomial whose `coefficients[i]` multiplies x**i.

    Trailing zeros are stripped on construction, so the zero polynomial
    has no coefficients and degree -1.  Arithmetic runs on the equivalent
    `sympy.Poly` over QQ.

    """

    coefficients: t.Tuple[ra.Rational, ...] = ()

    def __post_init__(self):
        coefficients = [ra.to_rational(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, *coefficients: ra.RationalLike) -> "RatPoly":
        """Build from ascending coefficients."""
        return cls(tuple(coefficients))

    @classmethod
    def descending(
        cls, coefficients: t.Sequence[ra.RationalLike]
    ) -> "RatPoly":
        """Build from coefficients written highest degree first."""
        return cls(tuple(reversed(list(coefficients))))

    @classmethod
    def constant(cls, value: ra.RationalLike) -> "RatPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: ra.RationalLike = 1):
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "RatPoly":
        return cls.descending(
            [from_sympy_rational(c) for c in poly.all_coeffs()]
        )

    @functools.cached_property
    def as_poly(self) -> sympy.Poly:
        """The same polynomial as a `sympy.Poly` in t over QQ."""
        if not self.coefficients:
            return sympy.Poly(0, T, domain=sympy.QQ)
        return sympy.Poly.from_list(
            [to_sympy_rational(c) for c in reversed(self.coefficients)],
            T,
            domain=sympy.QQ,
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> ra.Rational:
        if not self.coefficients:
            return ra.Rational(0)
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: ra.Rational) -> ra.Rational:
        """Evaluate exactly."""
        if not self.coefficients:
            return ra.Rational(0)
        return from_sympy_rational(self.as_poly.eval(to_sympy_rational(x)))

    def __add__(self, other: "RatPoly") -> "RatPoly":
        return RatPoly.from_sympy(self.as_poly + _lift(other).as_poly)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return RatPoly.from_sympy(self.as_poly - _lift(other).as_poly)

    def __rsub__(self, other) -> "RatPoly":
        return _lift(other) - self

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        return RatPoly.from_sympy(self.as_poly * other.as_poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPoly":
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent}.")
        return RatPoly.from_sympy(self.as_poly**exponent)

    def __divmod__(self, other: "RatPoly") -> t.Tuple["RatPoly", "RatPoly"]:
        """Euclidean division over the rationals."""
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial.")
        quotient, remainder = self.as_poly.div(other.as_poly)
        return RatPoly.from_sympy(quotient), RatPoly.from_sympy(remainder)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial.")
        return RatPoly.from_sympy(self.as_poly.rem(other.as_poly))

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Divide, raising if `other` does not divide `self`."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise RuntimeError(f"{other} does not divide {self}.")
        return quotient

    def scale(self, factor: ra.RationalLike) -> "RatPoly":
        factor = ra.to_rational(factor)
        return RatPoly(tuple(c * factor for c in self.coefficients))

    def derivative(self) -> "RatPoly":
        return RatPoly.from_sympy(self.as_poly.diff(T))

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Return self(inner(x))."""
        return RatPoly.from_sympy(self.as_poly.compose(inner.as_poly))

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return RatPoly.from_sympy(self.as_poly.monic())

    def content(self) -> ra.Rational:
        """Return the positive rational c with self/c primitive in Z[x]."""
        if self.is_zero():
            return ra.Rational(0)
        multiplier, integral = self.as_poly.clear_denoms(convert=True)
        content = abs(from_sympy_rational(integral.primitive()[0]))
        return content / from_sympy_rational(multiplier)

    def primitive(self) -> "RatPoly":
        """Scale by a positive rational to a primitive integer polynomial.

        The sign of every value is preserved.

        """
        if self.is_zero():
            return self
        return self.scale(1 / self.content())

    def integer_coefficients(self) -> list[int]:
        """Return the coefficients as integers, which they must be."""
        if any(c.denominator != 1 for c in self.coefficients):
            raise ValueError(f"{self} has non-integer coefficients.")
        return [c.numerator for c in self.coefficients]

    def display(self, variable: str = "t") -> str:
        """Render highest degree first, e.g. -31t⁴ + 18t³ - 2t + 1."""
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            magnitude = abs(c)
            body = "" if magnitude == 1 and i > 0 else str(magnitude)
            if i > 0:
                body += variable
            if i > 1:
                body += str(i).translate(_SUPERSCRIPTS)
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def __str__(self) -> str:
        return self.display()


def _lift(value) -> RatPoly:
    if isinstance(value, RatPoly):
        return value
    return RatPoly.constant(value)


X = RatPoly.of(0, 1)

ONE_PLUS_T_SQUARED = RatPoly.of(1, 0, 1)


def gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Return the monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        return RatPoly()
    return RatPoly.from_sympy(a.as_poly.gcd(b.as_poly)).monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """Return the monic product of the distinct irreducible factors."""
    if p.degree < 1:
        return p
    return RatPoly.from_sympy(p.as_poly.sqf_part()).monic()
