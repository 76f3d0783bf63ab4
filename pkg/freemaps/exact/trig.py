"""Trigonometric polynomials with rational coefficients.

A `TrigPoly` is a0 + sum_k (a_k cos kz + b_k sin kz), kept in the real
cos/sin basis.  Zero coefficients are never stored, so two polynomials
are equal iff their representations are.

"""
import dataclasses
import typing as t
from . import rational as ra

Term = t.Tuple[str, int, ra.Rational]


def _canonical(coeffs: t.Mapping[int, ra.RationalLike]):
    pairs = []
    for k, c in sorted(coeffs.items()):
        k = int(k)
        if k < 1:
            raise ValueError(f"Frequency {k} must be positive.")
        c = ra.to_rational(c)
        if c != 0:
            pairs.append((k, c))
    return tuple(pairs)


@dataclasses.dataclass(frozen=True)
class TrigPoly:
    """A finite Fourier series in z."""

    constant: ra.Rational = ra.Rational(0)
    cos_coeffs: t.Tuple[t.Tuple[int, ra.Rational], ...] = ()
    sin_coeffs: t.Tuple[t.Tuple[int, ra.Rational], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", ra.to_rational(self.constant))
        object.__setattr__(
            self, "cos_coeffs", _canonical(dict(self.cos_coeffs))
        )
        object.__setattr__(
            self, "sin_coeffs", _canonical(dict(self.sin_coeffs))
        )

    @classmethod
    def of(
        cls,
        constant: ra.RationalLike = 0,
        cos: t.Optional[t.Mapping[int, ra.RationalLike]] = None,
        sin: t.Optional[t.Mapping[int, ra.RationalLike]] = None,
    ) -> "TrigPoly":
        """Build from a constant and frequency maps."""
        return cls(
            constant,
            tuple((cos or {}).items()),
            tuple((sin or {}).items()),
        )

    @classmethod
    def cosine(cls, k: int = 1, coefficient: ra.RationalLike = 1):
        return cls.of(cos={k: coefficient})

    @classmethod
    def sine(cls, k: int = 1, coefficient: ra.RationalLike = 1):
        return cls.of(sin={k: coefficient})

    @classmethod
    def from_terms(cls, terms: t.Iterable[Term]) -> "TrigPoly":
        """Sum terms ("c", k, coeff) and ("s", k, coeff).

        Frequencies may be zero or negative; they are folded with
        cos(-kz) = cos kz and sin(-kz) = -sin kz.

        """
        constant = ra.Rational(0)
        cos: dict[int, ra.Rational] = {}
        sin: dict[int, ra.Rational] = {}
        for kind, k, c in terms:
            if kind == "s":
                if k == 0:
                    continue
                if k < 0:
                    k, c = -k, -c
                sin[k] = sin.get(k, 0) + c
            else:
                k = abs(k)
                if k == 0:
                    constant += c
                else:
                    cos[k] = cos.get(k, 0) + c
        return cls.of(constant, cos, sin)

    @property
    def cos(self) -> dict[int, ra.Rational]:
        return dict(self.cos_coeffs)

    @property
    def sin(self) -> dict[int, ra.Rational]:
        return dict(self.sin_coeffs)

    @property
    def max_frequency(self) -> int:
        keys = [k for k, _ in self.cos_coeffs + self.sin_coeffs]
        return max(keys, default=0)

    def is_zero(self) -> bool:
        return (
            self.constant == 0
            and not self.cos_coeffs
            and not self.sin_coeffs
        )

    def terms(self) -> t.Iterator[Term]:
        """Yield ("c", 0, a0), ("c", k, a_k) and ("s", k, b_k)."""
        if self.constant != 0:
            yield "c", 0, self.constant
        for k, c in self.cos_coeffs:
            yield "c", k, c
        for k, c in self.sin_coeffs:
            yield "s", k, c

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        other = _lift(other)
        return TrigPoly.from_terms([*self.terms(), *other.terms()])

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return self.scale(-1)

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "TrigPoly":
        return _lift(other) - self

    def __mul__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        products = []
        for kind_a, a, x in self.terms():
            for kind_b, b, y in other.terms():
                products.extend(
                    (kind, k, x * y * f)
                    for kind, k, f in product_terms(kind_a, a, kind_b, b)
                )
        return TrigPoly.from_terms(products)

    def __rmul__(self, other) -> "TrigPoly":
        return self.scale(other)

    def scale(self, factor: ra.RationalLike) -> "TrigPoly":
        factor = ra.to_rational(factor)
        return TrigPoly.from_terms(
            (kind, k, c * factor) for kind, k, c in self.terms()
        )

    def derivative(self) -> "TrigPoly":
        """Differentiate termwise in z."""
        return TrigPoly.of(
            0,
            {k: k * c for k, c in self.sin_coeffs},
            {k: -k * c for k, c in self.cos_coeffs},
        )

    def nth_derivative(self, n: int) -> "TrigPoly":
        result = self
        for _ in range(n):
            result = result.derivative()
        return result

    def __str__(self) -> str:
        parts = []
        if self.constant != 0 or self.is_zero():
            parts.append(str(self.constant))
        for kind, k, c in self.terms():
            if k == 0:
                continue
            angle = "z" if k == 1 else f"{k}z"
            name = "cos" if kind == "c" else "sin"
            parts.append(f"{c}·{name} {angle}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(value) -> TrigPoly:
    if isinstance(value, TrigPoly):
        return value
    return TrigPoly.of(value)


_HALF = ra.Rational(1, 2)


def product_terms(
    kind_a: str, a: int, kind_b: str, b: int
) -> list[Term]:
    """Expand a product of two basis functions by product-to-sum.

    Returned frequencies may be zero or negative; feed them to
    `TrigPoly.from_terms`.

    """
    if kind_a == "c" and kind_b == "c":
        return [("c", a - b, _HALF), ("c", a + b, _HALF)]
    if kind_a == "s" and kind_b == "s":
        return [("c", a - b, _HALF), ("c", a + b, -_HALF)]
    if kind_a == "s":
        return [("s", a + b, _HALF), ("s", a - b, _HALF)]
    return [("s", a + b, _HALF), ("s", a - b, -_HALF)]


def multiple_angles(
    cos_z: ra.Rational, sin_z: ra.Rational, n: int
) -> t.Tuple[list[ra.Rational], list[ra.Rational]]:
    """Return cos kz and sin kz for k = 0..n from cos z and sin z.

    Uses cos kz = 2 cos z cos (k-1)z - cos (k-2)z and the same
    recurrence for sin.

    """
    cos_k = [ra.Rational(1), cos_z]
    sin_k = [ra.Rational(0), sin_z]
    for k in range(2, n + 1):
        cos_k.append(2 * cos_z * cos_k[k - 1] - cos_k[k - 2])
        sin_k.append(2 * cos_z * sin_k[k - 1] - sin_k[k - 2])
    return cos_k[: n + 1], sin_k[: n + 1]


def eval_weierstrass(a: TrigPoly, t0: ra.RationalLike) -> ra.Rational:
    """Evaluate exactly at the angle z with tan(z/2) = t0."""
    t0 = ra.to_rational(t0)
    denominator = 1 + t0 * t0
    cos_k, sin_k = multiple_angles(
        (1 - t0 * t0) / denominator, 2 * t0 / denominator, a.max_frequency
    )
    return _combine(a, cos_k, sin_k)


def eval_at_pi(a: TrigPoly) -> ra.Rational:
    """Evaluate at z = pi, where cos kz = (-1)**k and sin kz = 0."""
    return a.constant + sum(
        (c if k % 2 == 0 else -c for k, c in a.cos_coeffs), ra.Rational(0)
    )


def _combine(a: TrigPoly, cos_k, sin_k) -> ra.Rational:
    value = a.constant
    for k, c in a.cos_coeffs:
        value += c * cos_k[k]
    for k, c in a.sin_coeffs:
        value += c * sin_k[k]
    return value
