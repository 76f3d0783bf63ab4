"""Tangent half-angle forms of trigonometric polynomials.

With t = tan(z/2), sin z = 2t/(1+t²) and cos z = (1-t²)/(1+t²), so every
trigonometric polynomial of frequency at most N equals P(t)/(1+t²)^N
with deg P ≤ 2N.

"""
import dataclasses
import functools
import math
from .exact import poly as po
from .exact import rational as ra
from .exact import trig as tr


@dataclasses.dataclass(frozen=True)
class WeierstrassForm:
    """numerator(t) / (1+t²)**denom_power."""

    numerator: po.RatPoly
    denom_power: int

    def __call__(self, t0: ra.Rational) -> ra.Rational:
        return self.numerator(t0) / (1 + t0 * t0) ** self.denom_power

    def minimal(self) -> "WeierstrassForm":
        """Cancel common factors of 1+t²."""
        numerator, power = self.numerator, self.denom_power
        if numerator.is_zero():
            return WeierstrassForm(numerator, 0)
        while power > 0:
            quotient, remainder = divmod(numerator, po.ONE_PLUS_T_SQUARED)
            if not remainder.is_zero():
                break
            numerator, power = quotient, power - 1
        return WeierstrassForm(numerator, power)


@functools.lru_cache(maxsize=None)
def _half_angle_numerators(k: int):
    """Return the numerators of cos kz and sin kz over (1+t²)**k."""
    cos_k, sin_k = po.RatPoly.constant(1), po.RatPoly()
    cos_1, sin_1 = po.RatPoly.of(1, 0, -1), po.RatPoly.of(0, 2)
    for _ in range(k):
        cos_k, sin_k = (
            cos_1 * cos_k - sin_1 * sin_k,
            sin_1 * cos_k + cos_1 * sin_k,
        )
    return cos_k, sin_k


def to_weierstrass(a: tr.TrigPoly) -> WeierstrassForm:
    """Substitute t = tan(z/2) and return the minimal form."""
    n = a.max_frequency
    numerator = po.RatPoly.constant(a.constant) * po.ONE_PLUS_T_SQUARED ** n
    for kind, k, c in a.terms():
        if k == 0:
            continue
        cos_k, sin_k = _half_angle_numerators(k)
        basis = cos_k if kind == "c" else sin_k
        numerator = numerator + (
            basis * po.ONE_PLUS_T_SQUARED ** (n - k)
        ).scale(c)
    return WeierstrassForm(numerator, n).minimal()


def from_weierstrass(form: WeierstrassForm) -> tr.TrigPoly:
    """Convert P(t)/(1+t²)**N with deg P ≤ 2N back to a `TrigPoly`.

    With w = exp(iz), t = -i(w-1)/(w+1) and 1+t² = 4w/(w+1)², so the
    form is 4**-N w**-N sum_j p_j (-i)**j (w-1)**j (w+1)**(2N-j).  The
    real and imaginary parts of the w**k coefficient give the cos and sin
    coefficients.

    """
    n = form.denom_power
    p = form.numerator.coefficients
    if len(p) > 2 * n + 1:
        raise ValueError(
            f"Degree {len(p) - 1} exceeds {2 * n}; not a trigonometric form."
        )
    real = [ra.Rational(0)] * (2 * n + 1)
    imaginary = [ra.Rational(0)] * (2 * n + 1)
    for j, pj in enumerate(p):
        if pj == 0:
            continue
        expanded = _binomial_product(j, 2 * n - j)
        if j % 2 == 0:
            factor = pj if (j // 2) % 2 == 0 else -pj
            for m, c in enumerate(expanded):
                real[m] += factor * c
        else:
            # (-i)**j = -i * (-1)**((j-1)/2)
            factor = -pj if ((j - 1) // 2) % 2 == 0 else pj
            for m, c in enumerate(expanded):
                imaginary[m] += factor * c
    scale = ra.Rational(1, 4**n)
    cos, sin = {}, {}
    for k in range(1, n + 1):
        cos[k] = 2 * real[n + k] * scale
        sin[k] = -2 * imaginary[n + k] * scale
    return tr.TrigPoly.of(real[n] * scale, cos, sin)


def _binomial_product(minus: int, plus: int) -> list[int]:
    """Coefficients of (w-1)**minus (w+1)**plus, ascending in w."""
    a = [math.comb(minus, i) * (-1) ** (minus - i) for i in range(minus + 1)]
    b = [math.comb(plus, i) for i in range(plus + 1)]
    result = [0] * (minus + plus + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            result[i + j] += x * y
    return result


def value_at_infinity_sign(form: WeierstrassForm) -> int:
    """Return the sign of the limit at t = ±∞, i.e. at z = pi.

    Zero means the limit vanishes because deg numerator < 2N (or the
    numerator is zero); use `trig.eval_at_pi` then.

    """
    if form.numerator.degree != 2 * form.denom_power:
        return 0
    return ra.sign(form.numerator.leading_coefficient)
